#pragma once

// Slow, independent reference computations used to cross-check the library.
// Nothing here calls into the library's arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using u8 = std::uint8_t;
using u64 = std::uint64_t;

inline unsigned bit_degree(u64 p) {
    unsigned d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

/// Carry-less product reduced modulo `mod` (degree s, as a bit mask).
inline u8 gf_mul(u8 a, u8 b, unsigned mod) {
    const unsigned s = bit_degree(mod);
    unsigned prod = 0;
    for (unsigned i = 0; i < 8; ++i)
        if ((b >> i) & 1) prod ^= static_cast<unsigned>(a) << i;
    for (int d = 15; d >= static_cast<int>(s); --d)
        if ((prod >> d) & 1) prod ^= mod << (d - s);
    return static_cast<u8>(prod);
}

inline u8 gf_inv(u8 a, unsigned mod) {
    const unsigned q = 1u << bit_degree(mod);
    for (unsigned x = 1; x < q; ++x)
        if (gf_mul(a, static_cast<u8>(x), mod) == 1) return static_cast<u8>(x);
    return 0;
}

/// Multiplicative order of x modulo `mod` over GF(2), 0 if x is not invertible.
inline u64 x_order(unsigned mod) {
    const unsigned s = bit_degree(mod);
    if (s == 1) return mod == 0b11 ? 1 : 0;
    const u64 n = (u64{1} << s) - 1;
    u8 v = 2;
    for (u64 k = 1; k <= n; ++k) {
        if (v == 1) return k;
        v = gf_mul(v, 2, mod);
    }
    return 0;
}

/// Smallest primitive polynomial of degree s over GF(2), by integer value.
inline unsigned smallest_primitive(unsigned s) {
    const u64 n = (u64{1} << s) - 1;
    for (unsigned p = 1u << s; p < (2u << s); ++p) {
        if (!(p & 1) && s > 1) continue;
        // Irreducible by trial division, then x must have full order.
        bool irreducible = true;
        for (unsigned d = 2; d < (1u << (s / 2 + 1)) && irreducible; ++d) {
            if (bit_degree(d) == 0 || bit_degree(d) > s / 2) continue;
            unsigned r = p;
            for (int k = static_cast<int>(bit_degree(r)); k >= static_cast<int>(bit_degree(d)); --k)
                if ((r >> k) & 1) r ^= d << (k - bit_degree(d));
            if (r == 0) irreducible = false;
        }
        if (irreducible && x_order(p) == n) return p;
    }
    return 0;
}

/// Polynomials over GF(q) as little-endian coefficient vectors.
using Poly = std::vector<u8>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, unsigned mod) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= gf_mul(a[i], b[j], mod);
    trim(out);
    return out;
}

inline Poly poly_mod(Poly a, const Poly& b, unsigned mod) {
    const u8 lead_inv = gf_inv(b.back(), mod);
    trim(a);
    while (a.size() >= b.size()) {
        const u8 c = gf_mul(a.back(), lead_inv, mod);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] ^= gf_mul(c, b[i], mod);
        trim(a);
    }
    return a;
}

/// Order of x in GF(q)[x] / (f) for monic f of degree m, capped at `limit`.
inline u64 ext_x_order(const Poly& f, unsigned mod, u64 limit) {
    Poly v{0, 1};
    for (u64 k = 1; k <= limit; ++k) {
        Poly r = poly_mod(v, f, mod);
        if (r == Poly{1}) return k;
        v = poly_mul(r, Poly{0, 1}, mod);
    }
    return 0;
}

/// First monic degree-m polynomial whose root is primitive, scanning the
/// lower coefficients packed s bits each in ascending integer order.
inline Poly smallest_primitive_ext(unsigned s, unsigned m, unsigned mod) {
    const u64 q = u64{1} << s, n = [&] {
        u64 x = 1;
        for (unsigned i = 0; i < m; ++i) x *= q;
        return x - 1;
    }();
    for (u64 packed = 1; packed < (n + 1); ++packed) {
        Poly f(m + 1, 0);
        for (unsigned j = 0; j < m; ++j) f[j] = static_cast<u8>((packed >> (j * s)) & (q - 1));
        f[m] = 1;
        if (f[0] == 0) continue;
        // Primitive iff x has order exactly n (this forces irreducibility).
        if (ext_x_order(f, mod, n) == n) return f;
    }
    return {};
}

inline u64 digit_sum(u64 i, u64 q) {
    u64 s = 0;
    for (; i; i /= q) s += i % q;
    return s;
}

/// Messages enumerated in lexicographic order, codewords computed as m G.
template <class Visit>
void for_each_codeword(const std::vector<std::vector<u8>>& G, unsigned q, unsigned mod, Visit visit) {
    const std::size_t k = G.size(), len = k ? G[0].size() : 0;
    std::vector<u8> msg(k, 0), word(len);
    while (true) {
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t r = 0; r < k; ++r)
            if (msg[r])
                for (std::size_t c = 0; c < len; ++c) word[c] ^= gf_mul(msg[r], G[r][c], mod);
        visit(word);
        std::size_t r = 0;
        while (r < k && ++msg[r] == q) msg[r++] = 0;
        if (r == k) break;
    }
}

inline std::size_t weight(const std::vector<u8>& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](u8 x) { return x != 0; }));
}

inline std::size_t min_distance(const std::vector<std::vector<u8>>& G, unsigned q, unsigned mod) {
    std::size_t best = SIZE_MAX;
    for_each_codeword(G, q, mod, [&](const std::vector<u8>& w) {
        const std::size_t x = weight(w);
        if (x && x < best) best = x;
    });
    return best;
}

inline std::map<std::size_t, u64> tally(const std::vector<std::vector<u8>>& G, unsigned q, unsigned mod) {
    std::map<std::size_t, u64> out;
    for_each_codeword(G, q, mod, [&](const std::vector<u8>& w) { ++out[weight(w)]; });
    return out;
}

/// Best BCH bound by direct extension of every progression start.
inline u64 best_bch(const std::set<u64>& T, u64 n) {
    if (T.empty()) return 1;
    u64 best = 0;
    for (u64 a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        for (u64 b = 0; b < n; ++b) {
            u64 len = 0;
            while (len < n - 1 && T.count((b + a * len) % n)) ++len;
            best = std::max(best, len);
        }
    }
    return best + 1;
}

__extension__ using u128 = unsigned __int128;

inline u128 gcd128(u128 a, u128 b) {
    while (b) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u128 pow128(u64 q, unsigned e) {
    u128 x = 1;
    for (unsigned i = 0; i < e; ++i) x *= q;
    return x;
}

}  // namespace oracle
