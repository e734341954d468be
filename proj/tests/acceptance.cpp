// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tdcodes/bounds.hpp"
#include "tdcodes/distance.hpp"

using namespace tdcodes;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

std::uint64_t ipow(std::uint64_t q, unsigned e) {
    std::uint64_t x = 1;
    for (unsigned i = 0; i < e; ++i) x *= q;
    return x;
}

std::string params(std::uint64_t n, std::uint64_t k) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "]";
}

std::vector<std::vector<std::uint8_t>> rows_of(const GfMatrix& g) {
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t r = 0; r < g.rows(); ++r) out.emplace_back(g.row(r).begin(), g.row(r).end());
    return out;
}

std::shared_ptr<const FieldTower> example_field() { return make_field(FieldSpec{2, 3, 0b111, {2, 1, 1, 1}}); }

void lemma1(Outcome& o) {
    int cases = 0;
    for (unsigned s = 1; s <= 4; ++s)
        for (unsigned m = 2; m <= 6 && s * m <= 20; ++m) {
            const std::uint64_t q = 1ULL << s, n = ipow(q, m) - 1;
            const DefiningSet t0 = build_T(q, m, Parity::Even), t1 = build_T(q, m, Parity::Odd);
            std::uint64_t even = 0, odd = 0;
            for (std::uint64_t i = 1; i < n; ++i) (oracle::digit_sum(i, q) % 2 ? odd : even)++;
            const std::string tag = "(" + std::to_string(q) + "," + std::to_string(m) + ")";
            o.expect(t0.size() == even && t1.size() == odd, tag + " sizes disagree with digit-sum count");
            if (m % 2) {
                o.expect(t0.size() == (n - 1) / 2 && t1.size() == (n - 1) / 2, tag + " odd-m sizes");
                o.expect(negate_set(t0) == t1, tag + " -T_0 = T_1");
            } else {
                o.expect(t0.size() == (n - 3) / 2 && t1.size() == (n + 1) / 2, tag + " even-m sizes");
                o.expect(negate_set(t0) == t0 && negate_set(t1) == t1, tag + " -T_i = T_i");
            }
            ++cases;
        }
    o.detail << cases << " (s,m) pairs";
}

void factorization(Outcome& o) {
    for (auto [s, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}}) {
        const auto f = make_field(s, m);
        const CosetPartition part(f->q(), f->n());
        oracle::Poly prod{1};
        for (std::uint32_t l : part.leaders()) {
            const auto c = minimal_polynomial(*f, l).coeffs();
            prod = oracle::poly_mul(prod, oracle::Poly(c.begin(), c.end()), f->base().modulus());
        }
        oracle::Poly want(f->n() + 1, 0);
        want.front() = want.back() = 1;
        o.expect(prod == want, "x^n - 1 at (" + std::to_string(f->q()) + "," + std::to_string(m) + ")");
        o.detail << "n=" << f->n() << ":" << part.leaders().size() << " cosets ";
    }
}

void example(Outcome& o) {
    constexpr std::uint8_t W = 2, W2 = 3;
    const std::map<int, std::uint8_t> g0 = {
        {31, 1}, {30, 1}, {29, W2}, {27, 1}, {26, W2}, {25, W2}, {24, W2}, {23, 1}, {21, 1},
        {18, 1}, {17, W},  {16, W}, {15, 1}, {13, 1},  {12, 1},  {10, 1},  {9, 1},  {8, 1},
        {7, W},  {6, W2},  {5, W},  {4, W},  {3, W2},  {2, W},   {0, 1}};
    const std::map<int, std::uint8_t> g1 = {
        {31, 1}, {29, W}, {28, W2}, {27, W}, {26, W}, {25, W2}, {24, W}, {23, 1}, {22, 1},
        {21, 1}, {19, 1}, {18, 1},  {16, 1}, {15, W}, {14, W},  {13, 1}, {10, 1}, {8, 1},
        {7, W2}, {6, W2}, {5, W2},  {4, 1},  {2, W2}, {1, 1},   {0, 1}};
    const auto f = example_field();
    for (Parity p : {Parity::Even, Parity::Odd}) {
        const CyclicCode c = base_code(f, p);
        const auto& published = p == Parity::Even ? g0 : g1;
        const std::string tag = "C_" + std::to_string(parity_index(p));
        o.expect(c.generator().degree() == 31 && c.generator().is_monic(), tag + " monic of degree 31");
        o.expect(c.dimension() == 32, tag + " dimension 32");
        int mismatches = 0;
        for (int d = 0; d <= 31; ++d) {
            const auto it = published.find(d);
            const std::uint8_t want = it == published.end() ? 0 : it->second;
            if (c.generator().coeff(static_cast<std::size_t>(d)) != want) {
                ++mismatches;
                o.detail << tag << " x^" << d << " differs; ";
            }
        }
        o.expect(mismatches == 0, tag + " coefficient mismatch");
        o.detail << tag << ": 32/32 coefficients match ";
    }
}

void theorem2(Outcome& o) {
    for (auto [s, m] : {std::pair{2u, 3u}, {3u, 3u}}) {
        const auto f = make_field(s, m);
        const BaseField& b = f->base();
        const std::uint64_t n = f->n();
        const std::string tag = "(" + std::to_string(f->q()) + "," + std::to_string(m) + ")";
        const CyclicCode c0 = base_code(f, Parity::Even), c1 = base_code(f, Parity::Odd);
        o.expect(splitting_check(c0.defining_set(), c1.defining_set(), static_cast<std::int64_t>(n - 1)).holds,
                 tag + " splitting");
        for (const CyclicCode* c : {&c0, &c1}) {
            const GfMatrix ext = extend_code(*c);
            const std::size_t k = rank(b, ext);
            o.expect(is_self_orthogonal(b, ext) && 2 * k == n + 1, tag + " extended self-dual");
            const CyclicCode el = even_like(*c);
            o.expect(is_self_orthogonal(b, generator_matrix(el)) && el.dimension() == (n - 1) / 2,
                     tag + " even-like self-orthogonal");
            const CyclicCode d = dual_code(*c), other = even_like(c == &c0 ? c1 : c0);
            o.expect(d.n() == other.n() && d.dimension() == other.dimension(), tag + " dual vs complement (n,k)");
        }
        o.detail << tag << " ext " << params(n + 1, (n + 1) / 2) << " ";
    }
}

void theorem3(Outcome& o) {
    for (auto [s, m] : {std::pair{2u, 2u}, {2u, 4u}, {3u, 2u}, {3u, 4u}}) {
        const auto f = make_field(s, m);
        const std::uint64_t n = f->n();
        const std::string tag = "(" + std::to_string(f->q()) + "," + std::to_string(m) + ")";
        const CyclicCode c0 = base_code(f, Parity::Even), c1 = base_code(f, Parity::Odd);
        o.expect(dual_code(c0) == even_like(c1) && dual_code(c1) == even_like(c0), tag + " dual identities");
        o.expect(is_lcd(c0) && is_lcd(c1), tag + " LCD");
        o.expect(c0.dimension() == (n + 3) / 2 && c1.dimension() == (n - 1) / 2, tag + " dimensions");
        if (n == 15 || n == 63) {
            o.expect(hull_dimension(f->base(), generator_matrix(c0)) == 0 &&
                         hull_dimension(f->base(), generator_matrix(c1)) == 0,
                     tag + " hull dimension 0");
            o.detail << tag << " hull 0 ";
        } else {
            o.detail << tag << " ";
        }
    }
}

void lemmas(Outcome& o) {
    struct Case { LemmaId id; unsigned m; };
    const std::vector<Case> cases = {{LemmaId::Lemma7, 3},   {LemmaId::Lemma7, 5},   {LemmaId::Lemma9, 6},
                                     {LemmaId::Lemma9, 10},  {LemmaId::Lemma10, 10}, {LemmaId::Lemma11, 6},
                                     {LemmaId::Lemma13, 4},  {LemmaId::Lemma13, 8},  {LemmaId::Lemma14, 4},
                                     {LemmaId::Lemma14, 8}};
    int checked = 0;
    for (std::uint64_t q : {4, 8, 16})
        for (const Case& c : cases) {
            if (static_cast<double>(c.m) * std::log2(static_cast<double>(q)) > 20) continue;
            const LemmaWitness lw = lemma_witness(c.id, q, c.m);
            const std::uint64_t n = ipow(q, c.m) - 1;
            const std::string tag = std::string(lemma_name(c.id)) + "(" + std::to_string(q) + "," + std::to_string(c.m) + ")";
            o.expect(std::gcd(lw.witness.a % n, n) == 1, tag + " gcd(a,n)");
            bool members = true;
            for (std::uint64_t x : progression_members(n, lw.witness))
                members = members && x != 0 && (oracle::digit_sum(x, q) % 2 == 0) == (lw.target == Parity::Even);
            o.expect(members, tag + " membership");
            o.expect(ap_in_set(build_T(q, c.m, lw.target), lw.witness), tag + " ap_in_set");
            o.expect(lw.witness.delta() == theorem_bound(q, c.m, lw.target), tag + " delta");
            ++checked;
        }
    o.expect(lemma_witness(LemmaId::Lemma7, 4, 3).witness.delta() == 11, "(4,3) -> 11");
    o.expect(lemma_witness(LemmaId::Lemma13, 4, 4).witness.delta() == 5, "(4,4) -> 5");
    o.expect(lemma_witness(LemmaId::Lemma11, 4, 6).witness.delta() == 26, "(4,6) -> 26");
    o.detail << checked << " witnesses";
}

std::map<int, std::uint64_t> exact_n15;

void exact15(Outcome& o) {
    const auto f = make_field(2, 2);
    for (Parity p : {Parity::Even, Parity::Odd}) {
        const CyclicCode c = base_code(f, p);
        const DistanceReport r = exact_distance(c);
        const std::uint64_t d = *r.exact;
        const std::uint64_t bch = bch_search(c.defining_set()).delta;
        const std::uint64_t thm = theorem_bound(4, 2, p);
        const std::uint64_t brute = oracle::min_distance(rows_of(generator_matrix(c)), 4, f->base().modulus());
        exact_n15[parity_index(p)] = d;
        o.expect(d == brute, "exhaustive agrees with brute force");
        o.expect(d >= 3 && d >= bch && bch >= thm, "d >= bch >= bound");
        o.detail << params(15, c.dimension()) << " d=" << d << " bch=" << bch << " bound=" << thm << " ";
    }
}

void sampled63(Outcome& o) {
    const auto f = example_field();
    const SampleOptions opts{.trials = 512, .seed = 1};
    for (Parity p : {Parity::Even, Parity::Odd}) {
        const CyclicCode c = base_code(f, p);
        const DistanceReport s = sampled_upper(c, opts);
        const DistanceReport again = sampled_upper(c, opts);
        const DistanceReport se = sampled_upper(f->base(), extend_code(c), opts);
        const BoundReport lb = lemma_bound(4, 3, p);
        o.expect(s.upper <= 15 && se.upper <= 16, "upper bounds");
        o.expect(again.upper == s.upper && again.witness == s.witness, "seed reproducibility");
        o.expect(is_codeword(c, s.witness) && hamming_weight(s.witness) == s.upper, "witness");
        o.expect(ap_in_set(c.defining_set(), *lb.witness) && lb.delta == 11, "lower bound 11");
        o.detail << "C_" << parity_index(p) << ": " << lb.delta << " <= d <= " << s.upper << ", extended <= "
                 << se.upper << "; ";
    }
}

void bch15(Outcome& o) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
        const DefiningSet T = build_T(4, 2, p);
        const BoundReport a = bch_search(T, {.threads = 1});
        const BoundReport b = bch_search(T, {.threads = 4});
        const BoundReport c = bch_search(T);
        std::set<std::uint64_t> elems(T.elems().begin(), T.elems().end());
        o.expect(a.delta == oracle::best_bch(elems, 15), "search optimal against brute force");
        o.expect(a.witness == b.witness && a.witness == c.witness, "canonical witness");
        if (exact_n15.count(parity_index(p))) o.expect(a.delta <= exact_n15[parity_index(p)], "delta <= exact d");
        o.expect(a.delta >= theorem_bound(4, 2, p), "delta >= bound");
        o.detail << "T_" << parity_index(p) << " delta=" << a.delta << " (b=" << a.witness->b << ",a=" << a.witness->a
                 << ") ";
    }
}

void lemma56(Outcome& o) {
    int l5 = 0, l6 = 0;
    for (std::uint64_t q : {4, 8, 16})
        for (unsigned m = 2; m <= 8; ++m)
            // gcd(q^m - 1, q^l + 1) depends on l only modulo 2m.
            for (unsigned l = 1; l <= 2 * m; ++l) {
                if ((m / std::gcd(l, m)) % 2 == 0) continue;
                const bool want = oracle::gcd128(oracle::pow128(q, m) - 1, oracle::pow128(q, l) + 1) == 1;
                o.expect(want && gcd_lemma5_check(q, l, m), "lemma 5 at q=" + std::to_string(q));
                ++l5;
            }
    for (std::uint64_t q : {4, 8})
        for (unsigned m = 2; m <= 4; ++m)
            for (std::uint64_t a = 2; a < q; ++a)
                for (unsigned h = 0; h < m; ++h) {
                    o.expect(lemma6_check(q, m, a, h), "lemma 6");
                    ++l6;
                }
    o.detail << l5 << " (q,l,m) and " << l6 << " (q,m,A,h) cases";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "defining set sizes and negation identities", 10, lemma1},
        {2, "product of minimal polynomials is x^n - 1", 10, factorization},
        {3, "example generator polynomials reproduced", 5, example},
        {4, "odd-m duadic, self-dual and self-orthogonal suite", 30, theorem2},
        {5, "even-m dual identities and LCD suite", 20, theorem3},
        {6, "lemma progression witnesses", 60, lemmas},
        {7, "exact distance of the n = 15 codes", 30, exact15},
        {8, "sampled distance witnesses at n = 63", 60, sampled63},
        {9, "bch_search optimality at n = 15", 10, bch15},
        {10, "gcd and q-weight identities, brute force", 10, lemma56},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) {
            o.ok = false;
            o.detail << " [over the " << c.limit_seconds << " s limit]";
        }
        failed += !o.ok;
        std::printf("%s criterion %2d: %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                    o.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
