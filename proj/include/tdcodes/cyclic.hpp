#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "tdcodes/coset.hpp"
#include "tdcodes/field.hpp"
#include "tdcodes/matrix.hpp"
#include "tdcodes/poly.hpp"

namespace tdcodes {

/// Minimal polynomial of beta^i over GF(q): the product of (x - beta^j) over
/// the q-cyclotomic coset of i, with coefficients projected back into GF(q).
Polynomial minimal_polynomial(const FieldTower& field, std::uint64_t i);

/// Product of the minimal polynomials of the coset leaders in T.
/// Throws ParameterError if T is not a union of cosets.
Polynomial generator_polynomial(const FieldTower& field, const DefiningSet& T);

/// A q-ary cyclic code of length n = q^m - 1 given by its defining set with
/// respect to the tower's beta. Two codes over the same tower are equal iff
/// their defining sets are equal.
class CyclicCode {
public:
    CyclicCode(std::shared_ptr<const FieldTower> field, DefiningSet T);

    const FieldTower& field() const noexcept { return *field_; }
    const std::shared_ptr<const FieldTower>& field_ptr() const noexcept { return field_; }
    std::uint64_t n() const noexcept { return T_.n(); }
    std::uint64_t q() const noexcept { return T_.q(); }
    const DefiningSet& defining_set() const noexcept { return T_; }
    const Polynomial& generator() const noexcept { return g_; }
    /// k = n - |T|.
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(n()) - T_.size(); }

    friend bool operator==(const CyclicCode& a, const CyclicCode& b) {
        return a.field_->spec() == b.field_->spec() && a.T_ == b.T_;
    }

private:
    std::shared_ptr<const FieldTower> field_;
    DefiningSet T_;
    Polynomial g_;
};

CyclicCode code_from_T(std::shared_ptr<const FieldTower> field, DefiningSet T);
/// C_(q,m;parity) over the given tower.
CyclicCode base_code(std::shared_ptr<const FieldTower> field, Parity parity);

/// Defining set T u {0}; throws ParameterError if 0 is already in T.
CyclicCode even_like(const CyclicCode& c);
/// Defining set Z_n \ (-T).
CyclicCode dual_code(const CyclicCode& c);
/// Defining set Z_n \ T.
CyclicCode complement_code(const CyclicCode& c);

/// Rows x^j g(x), j = 0..k-1.
GfMatrix generator_matrix(const CyclicCode& c);
std::vector<Symbol> encode(const CyclicCode& c, std::span<const Symbol> message);

/// Appends the overall-sum coordinate c_inf = sum c_i to every row.
GfMatrix extend(const GfMatrix& g);
GfMatrix extend_code(const CyclicCode& c);

/// -T == T, i.e. C cap C^perp = {0}.
bool is_lcd(const CyclicCode& c);

/// c(x) mod g(x) == 0 for a length-n word.
bool is_codeword(const CyclicCode& c, std::span<const Symbol> word);

}  // namespace tdcodes
