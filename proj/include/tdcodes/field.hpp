#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdcodes/base_field.hpp"
#include "tdcodes/poly.hpp"

namespace tdcodes {

/// Element of GF(q^m) in the polynomial basis over GF(q). Coefficient j
/// occupies bits [j*s, (j+1)*s) of `packed`, so addition is XOR.
struct ExtElement {
    std::uint64_t packed = 0;

    bool is_zero() const noexcept { return packed == 0; }
    friend auto operator<=>(const ExtElement&, const ExtElement&) = default;
};

/// Serialisable description of a field tower GF(2) -> GF(q) -> GF(q^m).
struct FieldSpec {
    unsigned s = 0;
    unsigned m = 0;
    /// Bit mask over GF(2), x^s term included.
    std::uint32_t base_modulus = 0;
    /// m+1 little-endian coefficients over GF(q); monic.
    std::vector<Symbol> ext_modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// The tower GF(2) -> GF(q) -> GF(q^m), q = 2^s, with primitive element
/// beta (the class of x modulo the extension modulus). Immutable.
///
/// Both moduli are validated: irreducibility, then primitivity by checking
/// that the root's order equals the full multiplicative group order using
/// the prime factorisation of that order. Discrete-log tables back
/// multiplication when q^m <= 2^20; larger towers multiply in the
/// polynomial basis.
class FieldTower {
public:
    static constexpr std::uint64_t kTableLimit = 1ULL << 20;

    /// 1 <= s <= 8, 2 <= m <= 16, s*m <= 64. Throws FieldError.
    FieldTower(unsigned s, unsigned m, std::optional<std::uint32_t> base_modulus = std::nullopt,
               std::optional<std::vector<Symbol>> ext_modulus = std::nullopt);
    explicit FieldTower(const FieldSpec& spec);

    const BaseField& base() const noexcept { return base_; }
    unsigned s() const noexcept { return base_.degree(); }
    unsigned m() const noexcept { return m_; }
    std::uint64_t q() const noexcept { return base_.size(); }
    /// n = q^m - 1, the order of beta.
    std::uint64_t n() const noexcept { return n_; }
    FieldSpec spec() const;
    bool uses_tables() const noexcept { return !exp_.empty(); }

    ExtElement zero() const noexcept { return {}; }
    ExtElement one() const noexcept { return {1}; }
    ExtElement add(ExtElement a, ExtElement b) const noexcept { return {a.packed ^ b.packed}; }
    ExtElement mul(ExtElement a, ExtElement b) const;
    ExtElement inv(ExtElement a) const;
    ExtElement pow(ExtElement a, std::uint64_t e) const;

    /// beta^(i mod n) for any integer i.
    ExtElement beta_power(std::int64_t i) const;
    /// Discrete log to base beta; requires tables and a nonzero argument.
    std::uint64_t log(ExtElement a) const;

    /// GF(q) -> GF(q^m) as constant polynomials.
    ExtElement embed(Symbol a) const noexcept { return {a}; }
    /// Inverse of embed on its image (the elements with x^q = x).
    std::optional<Symbol> project(ExtElement a) const noexcept;

    std::vector<Symbol> coeffs(ExtElement a) const;
    ExtElement from_coeffs(std::span<const Symbol> c) const;
    /// Comma-separated base reprs, constant term first.
    std::string render(ExtElement a) const;

    /// First monic degree-m polynomial over GF(q), scanning the packed lower
    /// coefficients in ascending integer order, whose root is primitive.
    static std::vector<Symbol> default_ext_modulus(const BaseField& base, unsigned m);

private:
    ExtElement mul_basis(ExtElement a, ExtElement b) const;
    ExtElement pow_basis(ExtElement a, std::uint64_t e) const;
    Symbol coeff(ExtElement a, unsigned j) const noexcept {
        return static_cast<Symbol>((a.packed >> (j * s())) & (q() - 1));
    }

    BaseField base_;
    unsigned m_;
    std::uint64_t n_;
    std::vector<Symbol> ext_modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Validated tower with default moduli filled in where omitted.
std::shared_ptr<const FieldTower> make_field(unsigned s, unsigned m,
                                             std::optional<std::uint32_t> base_modulus = std::nullopt,
                                             std::optional<std::vector<Symbol>> ext_modulus = std::nullopt);
std::shared_ptr<const FieldTower> make_field(const FieldSpec& spec);

/// a(x) evaluated at an element of the extension.
ExtElement evaluate(const FieldTower& f, const Polynomial& a, ExtElement x);

}  // namespace tdcodes
