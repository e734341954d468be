#include "tdcodes/cyclic.hpp"

#include <utility>

#include "tdcodes/error.hpp"

namespace tdcodes {

Polynomial minimal_polynomial(const FieldTower& field, std::uint64_t i) {
    const std::uint64_t n = field.n();
    if (i >= n) throw ParameterError("minimal_polynomial: i must lie in [0, n)");
    // Product over GF(q^m) of (x + beta^j), coefficients little-endian.
    std::vector<ExtElement> prod{field.one()};
    for (std::uint64_t j : cyclotomic_coset(i, field.q(), n)) {
        const ExtElement root = field.beta_power(static_cast<std::int64_t>(j));
        std::vector<ExtElement> next(prod.size() + 1);
        for (std::size_t d = 0; d < prod.size(); ++d) {
            next[d + 1] = field.add(next[d + 1], prod[d]);
            next[d] = field.add(next[d], field.mul(prod[d], root));
        }
        prod = std::move(next);
    }
    std::vector<Symbol> coeffs;
    coeffs.reserve(prod.size());
    for (ExtElement c : prod) {
        const auto b = field.project(c);
        if (!b || field.pow(c, field.q()) != c)
            throw FieldError("internal: minimal polynomial coefficient outside GF(q)");
        coeffs.push_back(*b);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial generator_polynomial(const FieldTower& field, const DefiningSet& T) {
    if (T.n() != field.n() || T.q() != field.q()) throw ParameterError("defining set does not match the field");
    if (!T.is_coset_closed()) throw ParameterError("defining set is not a union of cyclotomic cosets");
    const CosetPartition part(field.q(), field.n());
    Polynomial g = Polynomial::constant(1);
    for (std::uint32_t leader : part.leaders())
        if (T.contains(leader)) g = mul(field.base(), g, minimal_polynomial(field, leader));
    return g;
}

CyclicCode::CyclicCode(std::shared_ptr<const FieldTower> field, DefiningSet T)
    : field_(std::move(field)), T_(std::move(T)), g_(generator_polynomial(*field_, T_)) {}

CyclicCode code_from_T(std::shared_ptr<const FieldTower> field, DefiningSet T) {
    return CyclicCode(std::move(field), std::move(T));
}

CyclicCode base_code(std::shared_ptr<const FieldTower> field, Parity parity) {
    DefiningSet T = build_T(field->q(), field->m(), parity);
    return CyclicCode(std::move(field), std::move(T));
}

CyclicCode even_like(const CyclicCode& c) {
    const DefiningSet& T = c.defining_set();
    if (T.contains(0)) throw ParameterError("even_like: 0 already lies in the defining set");
    std::vector<std::int64_t> elems(T.elems().begin(), T.elems().end());
    elems.push_back(0);
    return CyclicCode(c.field_ptr(), DefiningSet(T.n(), T.q(), elems));
}

CyclicCode dual_code(const CyclicCode& c) { return CyclicCode(c.field_ptr(), dual_defining_set(c.defining_set())); }

CyclicCode complement_code(const CyclicCode& c) {
    return CyclicCode(c.field_ptr(), complement_set(c.defining_set()));
}

GfMatrix generator_matrix(const CyclicCode& c) {
    const std::size_t n = c.n(), k = c.dimension();
    const auto& g = c.generator().coeffs();
    GfMatrix out(k, n);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t d = 0; d < g.size(); ++d) out.at(j, j + d) = g[d];
    return out;
}

std::vector<Symbol> encode(const CyclicCode& c, std::span<const Symbol> message) {
    if (message.size() != c.dimension()) throw ParameterError("message length must equal the dimension");
    return vec_mul(c.field().base(), message, generator_matrix(c));
}

GfMatrix extend(const GfMatrix& g) {
    GfMatrix out(g.rows(), g.cols() + 1);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        Symbol sum = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            out.at(r, c) = g.at(r, c);
            sum ^= g.at(r, c);
        }
        out.at(r, g.cols()) = sum;
    }
    return out;
}

GfMatrix extend_code(const CyclicCode& c) { return extend(generator_matrix(c)); }

bool is_lcd(const CyclicCode& c) { return negate_set(c.defining_set()) == c.defining_set(); }

bool is_codeword(const CyclicCode& c, std::span<const Symbol> word) {
    if (word.size() != c.n()) return false;
    const Polynomial w(std::vector<Symbol>(word.begin(), word.end()));
    return divmod(c.field().base(), w, c.generator()).remainder.is_zero();
}

}  // namespace tdcodes
