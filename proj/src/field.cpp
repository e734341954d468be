#include "tdcodes/field.hpp"

#include <array>
#include <sstream>

#include "tdcodes/error.hpp"
#include "tdcodes/numtheory.hpp"

namespace tdcodes {
namespace {

constexpr unsigned kMaxM = 16;

// GF(q)[x] / (f) for a monic f of degree m, elements packed as in ExtElement.
// Works whether or not f is irreducible, so it doubles as the validation ring.
struct QuotientRing {
    const BaseField& base;
    const std::vector<Symbol>& f;
    unsigned m;

    unsigned s() const { return base.degree(); }
    Symbol coeff(std::uint64_t a, unsigned j) const {
        return static_cast<Symbol>((a >> (j * s())) & (base.size() - 1));
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        std::array<Symbol, kMaxM> ca{}, cb{};
        std::array<Symbol, 2 * kMaxM> prod{};
        for (unsigned j = 0; j < m; ++j) {
            ca[j] = coeff(a, j);
            cb[j] = coeff(b, j);
        }
        for (unsigned i = 0; i < m; ++i) {
            if (ca[i] == 0) continue;
            for (unsigned j = 0; j < m; ++j) prod[i + j] ^= base.mul(ca[i], cb[j]);
        }
        for (unsigned d = 2 * m - 2; d >= m; --d) {
            const Symbol c = prod[d];
            if (c == 0) continue;
            for (unsigned j = 0; j < m; ++j) prod[d - m + j] ^= base.mul(c, f[j]);
        }
        std::uint64_t out = 0;
        for (unsigned j = 0; j < m; ++j) out |= static_cast<std::uint64_t>(prod[j]) << (j * s());
        return out;
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        for (; e; e >>= 1) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }

    std::uint64_t x() const { return 1ULL << s(); }

    Polynomial to_poly(std::uint64_t a) const {
        std::vector<Symbol> c(m);
        for (unsigned j = 0; j < m; ++j) c[j] = coeff(a, j);
        return Polynomial(std::move(c));
    }
};

// Rabin's test: f is irreducible iff x^(q^m) = x mod f and
// gcd(x^(q^(m/r)) - x, f) = 1 for every prime r dividing m.
bool ext_irreducible(const QuotientRing& ring) {
    const unsigned m = ring.m;
    std::vector<std::uint64_t> frob(m + 1);
    frob[0] = ring.x();
    for (unsigned k = 1; k <= m; ++k) frob[k] = ring.pow(frob[k - 1], ring.base.size());
    if (frob[m] != ring.x()) return false;
    const Polynomial f(ring.f);
    for (std::uint64_t r : nt::prime_factors(m)) {
        Polynomial h = ring.to_poly(frob[m / r] ^ ring.x());
        if (gcd(ring.base, f, h).degree() != 0) return false;
    }
    return true;
}

bool ext_primitive_root(const QuotientRing& ring, std::uint64_t n, const std::vector<std::uint64_t>& primes) {
    if (ring.pow(ring.x(), n) != 1) return false;
    for (std::uint64_t p : primes)
        if (ring.pow(ring.x(), n / p) == 1) return false;
    return true;
}

void check_sizes(unsigned s, unsigned m) {
    if (s < 1 || s > 8) throw FieldError("s must be in [1, 8]");
    if (m < 2 || m > kMaxM) throw FieldError("m must be in [2, 16]");
    if (s * m > 64) throw FieldError("unsupported field size: s*m must be at most 64");
}

BaseField checked_base(unsigned s, unsigned m, std::optional<std::uint32_t> modulus) {
    check_sizes(s, m);
    return BaseField(s, modulus);
}

}  // namespace

std::vector<Symbol> FieldTower::default_ext_modulus(const BaseField& base, unsigned m) {
    check_sizes(base.degree(), m);
    const unsigned s = base.degree();
    const std::uint64_t n = s * m == 64 ? UINT64_MAX : (1ULL << (s * m)) - 1;
    std::vector<Symbol> f(m + 1, 0);
    f[m] = 1;
    const QuotientRing ring{base, f, m};
    const std::vector<std::uint64_t> primes = nt::prime_factors(n);
    for (std::uint64_t v = 1; v != 0 && v <= n; ++v) {
        if ((v & (base.size() - 1)) == 0) continue;
        for (unsigned j = 0; j < m; ++j) f[j] = ring.coeff(v, j);
        if (ext_irreducible(ring) && ext_primitive_root(ring, n, primes)) return f;
    }
    throw FieldError("no primitive extension modulus found");  // unreachable
}

FieldTower::FieldTower(unsigned s, unsigned m, std::optional<std::uint32_t> base_modulus,
                       std::optional<std::vector<Symbol>> ext_modulus)
    : base_(checked_base(s, m, base_modulus)), m_(m) {
    n_ = s * m == 64 ? UINT64_MAX : (1ULL << (s * m)) - 1;
    if (ext_modulus) {
        ext_modulus_ = std::move(*ext_modulus);
        if (ext_modulus_.size() != m + 1) throw FieldError("extension modulus must have degree m");
        if (ext_modulus_.back() != 1) throw FieldError("extension modulus must be monic");
        for (Symbol c : ext_modulus_)
            if (c >= base_.size()) throw FieldError("extension modulus coefficient outside GF(q)");
        const QuotientRing ring{base_, ext_modulus_, m_};
        if (!ext_irreducible(ring)) throw FieldError("extension modulus is reducible over GF(q)");
        if (!ext_primitive_root(ring, n_, nt::prime_factors(n_))) throw FieldError("root of the extension modulus is not primitive");
    } else {
        ext_modulus_ = default_ext_modulus(base_, m);
    }

    if (n_ < kTableLimit) {
        exp_.resize(n_);
        log_.assign(n_ + 1, 0);
        const std::uint64_t mask = (1ULL << (s * m)) - 1;
        std::uint64_t a = 1;
        for (std::uint64_t i = 0; i < n_; ++i) {
            exp_[i] = static_cast<std::uint32_t>(a);
            log_[a] = static_cast<std::uint32_t>(i);
            const Symbol top = coeff({a}, m - 1);
            a = (a << s) & mask;
            if (top != 0)
                for (unsigned j = 0; j < m; ++j)
                    a ^= static_cast<std::uint64_t>(base_.mul(top, ext_modulus_[j])) << (j * s);
        }
        if (a != 1) throw FieldError("internal: beta does not have order n");
    }
}

FieldTower::FieldTower(const FieldSpec& spec)
    : FieldTower(spec.s, spec.m, spec.base_modulus, spec.ext_modulus) {}

FieldSpec FieldTower::spec() const { return {s(), m_, base_.modulus(), ext_modulus_}; }

ExtElement FieldTower::mul_basis(ExtElement a, ExtElement b) const {
    return {QuotientRing{base_, ext_modulus_, m_}.mul(a.packed, b.packed)};
}

ExtElement FieldTower::pow_basis(ExtElement a, std::uint64_t e) const {
    return {QuotientRing{base_, ext_modulus_, m_}.pow(a.packed, e)};
}

ExtElement FieldTower::mul(ExtElement a, ExtElement b) const {
    if (a.is_zero() || b.is_zero()) return {};
    if (!uses_tables()) return mul_basis(a, b);
    std::uint64_t k = static_cast<std::uint64_t>(log_[a.packed]) + log_[b.packed];
    if (k >= n_) k -= n_;
    return {exp_[k]};
}

ExtElement FieldTower::inv(ExtElement a) const {
    if (a.is_zero()) throw ParameterError("inverse of zero in GF(q^m)");
    if (!uses_tables()) return pow_basis(a, n_ - 1);
    return {exp_[(n_ - log_[a.packed]) % n_]};
}

ExtElement FieldTower::pow(ExtElement a, std::uint64_t e) const {
    if (a.is_zero()) return e == 0 ? one() : zero();
    if (!uses_tables()) return pow_basis(a, e);
    return {exp_[nt::mulmod(log_[a.packed], e % n_, n_)]};
}

ExtElement FieldTower::beta_power(std::int64_t i) const {
    const std::uint64_t k = nt::mod(i, n_);
    if (uses_tables()) return {exp_[k]};
    return pow_basis({1ULL << s()}, k);
}

std::uint64_t FieldTower::log(ExtElement a) const {
    if (a.is_zero()) throw ParameterError("logarithm of zero");
    if (!uses_tables()) throw FieldError("discrete logarithm needs q^m <= 2^20");
    return log_[a.packed];
}

std::optional<Symbol> FieldTower::project(ExtElement a) const noexcept {
    if (a.packed < q()) return static_cast<Symbol>(a.packed);
    return std::nullopt;
}

std::vector<Symbol> FieldTower::coeffs(ExtElement a) const {
    std::vector<Symbol> out(m_);
    for (unsigned j = 0; j < m_; ++j) out[j] = coeff(a, j);
    return out;
}

ExtElement FieldTower::from_coeffs(std::span<const Symbol> c) const {
    if (c.size() != m_) throw ParameterError("extension element needs exactly m coefficients");
    std::uint64_t packed = 0;
    for (unsigned j = 0; j < m_; ++j) {
        if (c[j] >= q()) throw ParameterError("coefficient outside GF(q)");
        packed |= static_cast<std::uint64_t>(c[j]) << (j * s());
    }
    return {packed};
}

std::string FieldTower::render(ExtElement a) const {
    std::ostringstream os;
    for (unsigned j = 0; j < m_; ++j) os << (j ? "," : "") << static_cast<unsigned>(coeff(a, j));
    return os.str();
}

std::shared_ptr<const FieldTower> make_field(unsigned s, unsigned m, std::optional<std::uint32_t> base_modulus,
                                             std::optional<std::vector<Symbol>> ext_modulus) {
    return std::make_shared<const FieldTower>(s, m, base_modulus, std::move(ext_modulus));
}

std::shared_ptr<const FieldTower> make_field(const FieldSpec& spec) {
    return std::make_shared<const FieldTower>(spec);
}

ExtElement evaluate(const FieldTower& f, const Polynomial& a, ExtElement x) {
    ExtElement acc{};
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = f.add(f.mul(acc, x), f.embed(*it));
    return acc;
}

}  // namespace tdcodes
