#include "tdcodes/base_field.hpp"

#include <bit>

#include "tdcodes/error.hpp"
#include "tdcodes/numtheory.hpp"

namespace tdcodes {
namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
    const int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
    return a;
}

std::uint32_t mulmod2(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
    std::uint32_t r = 0;
    for (; b; b >>= 1, a <<= 1)
        if (b & 1) r ^= a;
    return poly_mod(r, m);
}

std::uint32_t powmod2(std::uint32_t a, std::uint64_t e, std::uint32_t m) {
    std::uint32_t r = poly_mod(1, m);
    a = poly_mod(a, m);
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod2(r, a, m);
        a = mulmod2(a, a, m);
    }
    return r;
}

}  // namespace

bool BaseField::is_irreducible(std::uint32_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    for (std::uint32_t div = 2; poly_degree(div) <= d / 2; ++div)
        if (poly_mod(poly, div) == 0) return false;
    return true;
}

bool BaseField::is_primitive(std::uint32_t poly) {
    if (!is_irreducible(poly)) return false;
    const int s = poly_degree(poly);
    const std::uint64_t order = (1ULL << s) - 1;
    if (powmod2(2, order, poly) != 1) return false;
    for (std::uint64_t p : nt::prime_factors(order))
        if (powmod2(2, order / p, poly) == 1) return false;
    return true;
}

std::uint32_t BaseField::default_modulus(unsigned s) {
    if (s < 1 || s > 8) throw FieldError("base field degree s must be in [1, 8]");
    for (std::uint32_t p = 1u << s; p < (2u << s); ++p)
        if (is_primitive(p)) return p;
    throw FieldError("no primitive polynomial found");  // unreachable
}

BaseField::BaseField(unsigned s, std::optional<std::uint32_t> modulus) : s_(s), q_(1u << s) {
    if (s < 1 || s > 8) throw FieldError("base field degree s must be in [1, 8]");
    modulus_ = modulus ? *modulus : default_modulus(s);
    if (poly_degree(modulus_) != static_cast<int>(s))
        throw FieldError("base modulus must have degree " + std::to_string(s));
    if (!is_irreducible(modulus_)) throw FieldError("base modulus is reducible over GF(2)");
    if (!is_primitive(modulus_)) throw FieldError("root of the base modulus is not primitive");

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = static_cast<Symbol>(x);
        log_[x] = i;
        x = mulmod2(x, 2, modulus_);
    }
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            mul_[a * q_ + b] = exp_[(log_[a] + log_[b]) % (q_ - 1)];

    tables_.resize(q_);
    for (std::uint32_t c = 0; c < q_; ++c) {
        for (std::uint32_t nib = 0; nib < 16; ++nib) {
            if (nib < q_) tables_[c].lo[nib] = mul(static_cast<Symbol>(c), static_cast<Symbol>(nib));
            if ((nib << 4) < q_) tables_[c].hi[nib] = mul(static_cast<Symbol>(c), static_cast<Symbol>(nib << 4));
        }
    }
}

Symbol BaseField::inv(Symbol a) const {
    if (a == 0) throw ParameterError("inverse of zero in GF(q)");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Symbol BaseField::pow(Symbol a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw ParameterError("negative power of zero in GF(q)");
        return e == 0 ? 1 : 0;
    }
    const std::uint64_t k = nt::mod(e, q_ - 1);
    return exp_[(nt::mulmod(log_[a], k, q_ - 1))];
}

unsigned BaseField::log(Symbol a) const {
    if (a == 0) throw ParameterError("logarithm of zero");
    return log_[a];
}

std::string BaseField::render(Symbol a) const {
    if (a == 0) return "0";
    const unsigned k = log_[a];
    if (k == 0) return "1";
    if (k == 1) return "w";
    return "w^" + std::to_string(k);
}

}  // namespace tdcodes
