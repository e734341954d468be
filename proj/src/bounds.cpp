#include "tdcodes/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <thread>

#include "tdcodes/error.hpp"
#include "tdcodes/numtheory.hpp"

namespace tdcodes {
namespace {

constexpr std::array<std::pair<LemmaId, std::string_view>, 8> kNames{{
    {LemmaId::Lemma7, "lemma7"},
    {LemmaId::Lemma9, "lemma9"},
    {LemmaId::Lemma10, "lemma10"},
    {LemmaId::Lemma11, "lemma11"},
    {LemmaId::Lemma13, "lemma13"},
    {LemmaId::Lemma14, "lemma14"},
    {LemmaId::Thm12M2Even, "thm12_m2_even"},
    {LemmaId::Thm12M2Odd, "thm12_m2_odd"},
}};

std::uint64_t pw(std::uint64_t q, unsigned e) { return nt::checked_pow(q, e); }

void require_q(std::uint64_t q) {
    if (q < 4 || !std::has_single_bit(q)) throw ParameterError("q must be a power of two with q >= 4");
}

struct Run {
    std::uint64_t length = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
};

bool better(const Run& x, const Run& y) {
    if (x.length != y.length) return x.length > y.length;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

// Longest circular run of i with (a i) mod n in T; ties to the smallest start b.
Run longest_run(const DefiningSet& T, std::uint64_t a) {
    const std::uint64_t n = T.n();
    Run best{0, a, 0};
    // Start just after a non-member so no run wraps past the scan origin.
    std::uint64_t origin = n;
    for (std::uint64_t i = 0, x = 0; i < n; ++i) {
        if (!T.contains(x)) {
            origin = i;
            break;
        }
        x += a;
        if (x >= n) x -= n;
    }
    if (origin == n) return {n - 1, a, 0};

    std::uint64_t x = nt::mulmod(a, origin, n);
    std::uint64_t run = 0, start = 0;
    for (std::uint64_t step = 0; step < n; ++step) {
        x += a;
        if (x >= n) x -= n;
        if (T.contains(x)) {
            if (run == 0) start = x;
            ++run;
            if (run > best.length || (run == best.length && start < best.b)) best = {run, a, start};
        } else {
            run = 0;
        }
    }
    return best;
}

}  // namespace

std::string_view lemma_name(LemmaId id) {
    for (const auto& [k, name] : kNames)
        if (k == id) return name;
    return "unknown";
}

std::optional<LemmaId> parse_lemma(std::string_view name) {
    for (const auto& [k, v] : kNames)
        if (v == name) return k;
    return std::nullopt;
}

std::vector<std::uint64_t> progression_members(std::uint64_t n, const APWitness& w) {
    std::vector<std::uint64_t> out;
    if (w.i_lo > w.i_hi) return out;
    out.reserve(w.length());
    for (std::int64_t i = w.i_lo; i <= w.i_hi; ++i) {
        const std::uint64_t ai = nt::mulmod(w.a % n, nt::mod(i, n), n);
        out.push_back((w.b % n + ai) % n);
    }
    return out;
}

bool ap_in_set(const DefiningSet& T, const APWitness& w) {
    if (w.i_lo > w.i_hi) throw ParameterError("empty progression: i_lo > i_hi");
    if (std::gcd(w.a % T.n(), T.n()) != 1) throw ParameterError("progression step a is not coprime to n");
    for (std::uint64_t r : progression_members(T.n(), w))
        if (!T.contains(r)) return false;
    return true;
}

LemmaWitness lemma_witness(LemmaId id, std::uint64_t q, unsigned m) {
    require_q(q);
    if (m < 2) throw ParameterError("m must be at least 2");
    const auto qi = static_cast<std::int64_t>(q);
    const std::uint64_t n = pw(q, m) - 1;
    const std::uint64_t ones_m = n / (q - 1);  // (q^m - 1)/(q - 1)
    auto domain = [&](bool ok, const char* what) {
        if (!ok) throw ParameterError(std::string(lemma_name(id)) + " requires " + what);
    };
    switch (id) {
    case LemmaId::Lemma7: {
        domain(m >= 3 && m % 2 == 1, "odd m >= 3");
        const std::uint64_t h = pw(q, (m - 1) / 2);
        return {id, {2 * pw(q, m - 1), h + 1, -(qi - 1), static_cast<std::int64_t>(h) + qi - 2}, Parity::Even};
    }
    case LemmaId::Lemma9: {
        domain(m >= 6 && m % 4 == 2, "m = 2 mod 4 and m >= 6");
        const std::uint64_t h = pw(q, (m - 2) / 2);
        return {id, {pw(q, m - 2), h + 1, -(qi - 1), static_cast<std::int64_t>(h) + qi - 2}, Parity::Odd};
    }
    case LemmaId::Lemma10: {
        domain(m >= 10 && m % 4 == 2, "m = 2 mod 4 and m >= 10");
        const std::uint64_t h = pw(q, (m - 2) / 2);
        return {id,
                {pw(q, m - 1) + pw(q, m - 2), h + 1, -(qi - 1), static_cast<std::int64_t>(h) + qi - 2},
                Parity::Even};
    }
    case LemmaId::Lemma11: {
        domain(m == 6, "m = 6");
        const std::uint64_t a = ones_m - pw(q, (m + 2) / 2) - 1;
        const std::int64_t r = qi * qi - qi;
        return {id, {pw(q, m - 1) + q, a, -r, r}, Parity::Even};
    }
    case LemmaId::Lemma13: {
        domain(m >= 4 && m % 4 == 0, "m = 0 mod 4 and m >= 4");
        const std::uint64_t a = ((q - 2) / 2) * ones_m + (pw(q, (m - 2) / 2) - 1) / (q - 1);
        return {id, {pw(q, m - 1), a, 1, static_cast<std::int64_t>(pw(q, (m - 2) / 2))}, Parity::Even};
    }
    case LemmaId::Lemma14: {
        domain(m >= 4 && m % 4 == 0, "m = 0 mod 4 and m >= 4");
        const std::uint64_t a = ones_m - 2 * ((pw(q, (m + 2) / 2) - 1) / (q - 1));
        return {id, {0, a, 1, static_cast<std::int64_t>(pw(q, (m - 2) / 2))}, Parity::Odd};
    }
    case LemmaId::Thm12M2Even:
        domain(m == 2, "m = 2");
        return {id, {2 * q, 2, 0, qi / 2 - 1}, Parity::Even};
    case LemmaId::Thm12M2Odd:
        domain(m == 2, "m = 2");
        return {id, {q, 2, 0, qi / 2 - 1}, Parity::Odd};
    }
    throw ParameterError("unknown lemma");
}

std::uint64_t theorem_bound(std::uint64_t q, unsigned m, Parity parity) {
    require_q(q);
    if (m < 2) throw ParameterError("m must be at least 2");
    if (m % 2 == 1) return pw(q, (m - 1) / 2) + 2 * q - 1;
    if (m == 2) return (q + 2) / 2;
    if (m % 4 == 0) return pw(q, (m - 2) / 2) + 1;
    if (m == 6 && parity == Parity::Even) return 2 * q * q - 2 * q + 2;
    return pw(q, (m - 2) / 2) + 2 * q - 1;
}

BoundReport lemma_bound(std::uint64_t q, unsigned m, Parity parity) {
    require_q(q);
    LemmaId id{};
    bool negate = false;
    if (m % 2 == 1) {
        id = LemmaId::Lemma7;
        negate = parity == Parity::Odd;
    } else if (m == 2) {
        id = parity == Parity::Even ? LemmaId::Thm12M2Even : LemmaId::Thm12M2Odd;
    } else if (m % 4 == 0) {
        id = parity == Parity::Even ? LemmaId::Lemma13 : LemmaId::Lemma14;
    } else if (parity == Parity::Odd) {
        id = LemmaId::Lemma9;
    } else {
        id = m == 6 ? LemmaId::Lemma11 : LemmaId::Lemma10;
    }
    LemmaWitness lw = lemma_witness(id, q, m);
    BoundReport out;
    out.source = std::string(lemma_name(id));
    if (negate) {
        // -(b + a i) = (n - b) + a (-i)
        const std::uint64_t n = pw(q, m) - 1;
        lw.witness = {(n - lw.witness.b) % n, lw.witness.a, -lw.witness.i_hi, -lw.witness.i_lo};
        out.source += "_negated";
    }
    out.witness = lw.witness;
    out.delta = lw.witness.delta();
    return out;
}

BoundReport bch_search(const DefiningSet& T, const SearchOptions& opts) {
    const std::uint64_t n = T.n();
    BoundReport report;
    report.source = "search";
    if (T.empty() || n < 2) return report;

    // Orbit minima of the units under a -> -a (and a -> q a when T is q-closed).
    const bool q_closed = T.is_coset_closed();
    std::vector<bool> seen(n, false);
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t a = 1; a < n; ++a) {
        if (seen[a] || std::gcd(a, n) != 1) continue;
        candidates.push_back(a);
        std::uint64_t x = a;
        do {
            seen[x] = true;
            seen[n - x] = true;
            x = q_closed ? nt::mulmod(x, T.q(), n) : a;
        } while (x != a);
    }
    const std::uint64_t affordable = opts.budget / n;
    if (candidates.size() > affordable) {
        candidates.resize(affordable);
        report.partial = true;
    }
    report.evaluations = candidates.size() * n;
    if (candidates.empty()) return report;

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, candidates.size()));
    std::vector<Run> best(threads);
    auto work = [&](unsigned t) {
        for (std::size_t idx = t; idx < candidates.size(); idx += threads) {
            const Run r = longest_run(T, candidates[idx]);
            if (best[t].a == 0 || better(r, best[t])) best[t] = r;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    Run top = best[0];
    for (const Run& r : best)
        if (r.a != 0 && better(r, top)) top = r;
    if (top.length == 0) return report;
    report.witness = APWitness{top.b, top.a, 0, static_cast<std::int64_t>(top.length) - 1};
    report.delta = top.length + 1;
    return report;
}

}  // namespace tdcodes
