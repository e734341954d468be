#include "tdcodes/coset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tdcodes/error.hpp"
#include "tdcodes/numtheory.hpp"

namespace tdcodes {

DefiningSet::DefiningSet(std::uint64_t n, std::uint64_t q, const std::vector<std::int64_t>& residues)
    : n_(n), q_(q) {
    if (n == 0 || n > kMaxModulus) throw ParameterError("defining-set modulus must be in [1, 2^24]");
    bits_.assign((n + 63) / 64, 0);
    for (std::int64_t v : residues) {
        const std::uint64_t r = nt::mod(v, n);
        bits_[r >> 6] |= 1ULL << (r & 63);
    }
    for (std::size_t w = 0; w < bits_.size(); ++w)
        for (std::uint64_t word = bits_[w]; word; word &= word - 1)
            elems_.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(word)));
}

DefiningSet DefiningSet::full(std::uint64_t n, std::uint64_t q) {
    return from_predicate(n, q, [](std::uint64_t) { return true; });
}

void DefiningSet::insert_sorted(std::uint64_t r) {
    bits_[r >> 6] |= 1ULL << (r & 63);
    elems_.push_back(static_cast<std::uint32_t>(r));
}

bool DefiningSet::is_coset_closed() const {
    if (n_ == 1) return true;
    for (std::uint32_t e : elems_)
        if (!contains(nt::mulmod(e, q_, n_))) return false;
    return true;
}

std::vector<std::uint64_t> q_adic_digits(std::uint64_t i, std::uint64_t q, unsigned m) {
    if (q < 2) throw ParameterError("q must be at least 2");
    std::vector<std::uint64_t> digits(m, 0);
    std::uint64_t rest = i;
    for (unsigned j = 0; j < m; ++j) {
        digits[j] = rest % q;
        rest /= q;
    }
    if (rest != 0) throw ParameterError("i exceeds q^m - 1");
    return digits;
}

std::uint64_t q_weight(std::uint64_t i, std::uint64_t q, unsigned m) {
    const auto d = q_adic_digits(i, q, m);
    return std::accumulate(d.begin(), d.end(), std::uint64_t{0});
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t q, std::uint64_t n) {
    if (n == 0 || std::gcd(n, q) != 1) throw ParameterError("cyclotomic cosets need gcd(n, q) = 1");
    i %= n;
    std::vector<std::uint64_t> out{i};
    for (std::uint64_t x = nt::mulmod(i, q, n); x != i; x = nt::mulmod(x, q, n)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

CosetPartition::CosetPartition(std::uint64_t q, std::uint64_t n) : q_(q), n_(n) {
    if (n == 0 || n > DefiningSet::kMaxModulus) throw ParameterError("coset modulus must be in [1, 2^24]");
    if (std::gcd(n, q) != 1) throw ParameterError("cyclotomic cosets need gcd(n, q) = 1");
    constexpr std::uint32_t kUnset = UINT32_MAX;
    leader_of_.assign(n, kUnset);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (leader_of_[i] != kUnset) continue;
        // i is the smallest unvisited residue, hence the minimum of its coset.
        leaders_.push_back(static_cast<std::uint32_t>(i));
        std::uint64_t x = i;
        do {
            leader_of_[x] = static_cast<std::uint32_t>(i);
            x = nt::mulmod(x, q, n);
        } while (x != i);
    }
}

std::vector<std::uint64_t> CosetPartition::coset(std::uint64_t leader) const {
    if (leader >= n_ || leader_of_[leader] != leader) throw ParameterError("not a coset leader");
    return cyclotomic_coset(leader, q_, n_);
}

std::size_t CosetPartition::coset_size(std::uint64_t leader) const {
    if (leader >= n_ || leader_of_[leader] != leader) throw ParameterError("not a coset leader");
    std::size_t size = 1;
    for (std::uint64_t x = nt::mulmod(leader, q_, n_); x != leader; x = nt::mulmod(x, q_, n_)) ++size;
    return size;
}

std::uint64_t code_length(std::uint64_t q, unsigned m) {
    if (q < 2 || !std::has_single_bit(q)) throw ParameterError("q must be a power of two");
    if (m < 2) throw ParameterError("m must be at least 2");
    const std::uint64_t n = nt::checked_pow(q, m) - 1;
    if (n > DefiningSet::kMaxModulus) throw ParameterError("q^m - 1 exceeds the supported set size");
    return n;
}

DefiningSet build_T(std::uint64_t q, unsigned m, Parity parity) {
    const std::uint64_t n = code_length(q, m);
    const std::uint64_t want = static_cast<std::uint64_t>(parity_index(parity));
    DefiningSet out(n, q);
    // Odometer over the base-q digits keeps the weight update O(1) amortised.
    std::vector<std::uint64_t> digits(m, 0);
    std::uint64_t weight = 0;
    std::vector<std::int64_t> members;
    for (std::uint64_t i = 1; i < n; ++i) {
        unsigned j = 0;
        while (digits[j] == q - 1) {
            digits[j] = 0;
            weight -= q - 1;
            ++j;
        }
        ++digits[j];
        ++weight;
        if ((weight & 1) == want) members.push_back(static_cast<std::int64_t>(i));
    }
    return DefiningSet(n, q, members);
}

DefiningSet negate_set(const DefiningSet& s) { return scale_set(-1, s); }

DefiningSet scale_set(std::int64_t v, const DefiningSet& s) {
    const std::uint64_t n = s.n();
    const std::uint64_t vr = nt::mod(v, n);
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (std::uint32_t e : s.elems()) out.push_back(static_cast<std::int64_t>(nt::mulmod(vr, e, n)));
    return DefiningSet(n, s.q(), out);
}

DefiningSet complement_set(const DefiningSet& s) {
    return DefiningSet::from_predicate(s.n(), s.q(), [&](std::uint64_t r) { return !s.contains(r); });
}

DefiningSet dual_defining_set(const DefiningSet& s) { return complement_set(negate_set(s)); }

SplittingCheck splitting_check(const DefiningSet& s1, const DefiningSet& s2, std::int64_t v) {
    if (s1.n() != s2.n() || s1.q() != s2.q()) return {false, "sets have different n or q"};
    const std::uint64_t n = s1.n();
    for (std::uint32_t e : s1.elems())
        if (s2.contains(e)) return {false, "S1 and S2 intersect"};
    if (s1.contains(0) || s2.contains(0)) return {false, "0 lies in S1 or S2"};
    if (s1.size() + s2.size() != n - 1) return {false, "S1 and S2 do not cover Z_n \\ {0}"};
    if (!s1.is_coset_closed() || !s2.is_coset_closed()) return {false, "S1 or S2 is not a union of cosets"};
    const std::uint64_t vr = nt::mod(v, n);
    if (std::gcd(vr, n) != 1) return {false, "v is not a unit modulo n"};
    if (scale_set(v, s1) != s2) return {false, "v S1 != S2"};
    if (scale_set(v, s2) != s1) return {false, "v S2 != S1"};
    return {true, "splitting"};
}

bool gcd_lemma5_check(std::uint64_t q, std::uint64_t l, unsigned m) {
    if (q < 2 || !std::has_single_bit(q)) throw ParameterError("q must be a power of two");
    if (m < 2 || l < 1) throw ParameterError("need m >= 2 and l >= 1");
    if ((m / std::gcd<std::uint64_t>(l, m)) % 2 == 0) throw ParameterError("m / gcd(l, m) must be odd");
    const std::uint64_t n = nt::checked_pow(q, m) - 1;
    const std::uint64_t other = (nt::powmod(q, l, n) + 1) % n;
    return std::gcd(n, other) == 1;
}

bool lemma6_check(std::uint64_t q, unsigned m, std::uint64_t A, unsigned h) {
    if (q < 3 || m < 2) throw ParameterError("need q >= 3 and m >= 2");
    if (A < 2 || A > q - 1) throw ParameterError("need 2 <= A <= q - 1");
    if (h > m - 1) throw ParameterError("need 0 <= h <= m - 1");
    const std::uint64_t top = A * nt::checked_pow(q, h);
    for (std::uint64_t i = 0; i < top; ++i) {
        const std::uint64_t lhs = q_weight(top - 1 - i, q, m);
        const std::int64_t rhs = static_cast<std::int64_t>((q - 1) * h + A - 1) -
                                 static_cast<std::int64_t>(q_weight(i, q, m));
        if (static_cast<std::int64_t>(lhs) != rhs) return false;
    }
    return true;
}

}  // namespace tdcodes
