#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tdcodes/base_field.hpp"

namespace tdcodes {

/// Polynomial over GF(q), little-endian coefficients. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Symbol> coeffs);

    static Polynomial constant(Symbol c);
    static Polynomial monomial(std::size_t degree, Symbol c = 1);
    /// x^n - 1 (= x^n + 1 in characteristic 2).
    static Polynomial x_n_minus_1(std::size_t n);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Symbol coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Symbol{0}; }
    Symbol leading() const noexcept { return c_.empty() ? Symbol{0} : c_.back(); }
    const std::vector<Symbol>& coeffs() const noexcept { return c_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Symbol> c_;
};

struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};

Polynomial add(const BaseField& f, const Polynomial& a, const Polynomial& b);
Polynomial mul(const BaseField& f, const Polynomial& a, const Polynomial& b);
Polynomial scale(const BaseField& f, const Polynomial& a, Symbol c);
/// Throws ParameterError when dividing by zero.
PolyDivision divmod(const BaseField& f, const Polynomial& a, const Polynomial& b);
Polynomial make_monic(const BaseField& f, const Polynomial& a);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const BaseField& f, Polynomial a, Polynomial b);
/// x^deg(a) a(1/x), trimmed.
Polynomial reciprocal(const Polynomial& a);
Symbol evaluate(const BaseField& f, const Polynomial& a, Symbol x);

/// Descending-degree text in w notation, e.g. "x^3 + w x^2 + 1".
std::string render(const BaseField& f, const Polynomial& a);

}  // namespace tdcodes
