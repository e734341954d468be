#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdcodes/coset.hpp"

namespace tdcodes {

/// Arithmetic progression {(b + a i) mod n : i_lo <= i <= i_hi}. When all
/// members lie in a defining set and gcd(a, n) = 1, the code has minimum
/// distance at least length() + 1.
struct APWitness {
    std::uint64_t b = 0;
    std::uint64_t a = 1;
    std::int64_t i_lo = 0;
    std::int64_t i_hi = 0;

    std::uint64_t length() const noexcept { return static_cast<std::uint64_t>(i_hi - i_lo + 1); }
    std::uint64_t delta() const noexcept { return length() + 1; }
    friend bool operator==(const APWitness&, const APWitness&) = default;
};

/// Progressions named after the lemma that exhibits them. Thm12M2* are the
/// m = 2 progressions {2q + 2i} (T_0) and {q + 2i} (T_1).
enum class LemmaId { Lemma7, Lemma9, Lemma10, Lemma11, Lemma13, Lemma14, Thm12M2Even, Thm12M2Odd };

std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma(std::string_view name);

struct LemmaWitness {
    LemmaId lemma;
    APWitness witness;
    Parity target;
};

/// Members of the progression, reduced mod n, in index order.
std::vector<std::uint64_t> progression_members(std::uint64_t n, const APWitness& w);

/// Whether every member of the progression lies in T. Throws ParameterError
/// if i_lo > i_hi or gcd(a, n) != 1.
bool ap_in_set(const DefiningSet& T, const APWitness& w);

/// The lemma's progression for (q, m). Throws ParameterError outside the
/// lemma's domain (q = 2^s >= 4 plus the lemma's condition on m).
LemmaWitness lemma_witness(LemmaId id, std::uint64_t q, unsigned m);

/// Closed-form lower bound on d(C_(q,m;parity)), q = 2^s >= 4, m >= 2.
std::uint64_t theorem_bound(std::uint64_t q, unsigned m, Parity parity);

struct BoundReport {
    /// 1 means no bound was found.
    std::uint64_t delta = 1;
    std::optional<APWitness> witness;
    std::string source;
    /// Search stopped at its budget; delta is the best seen so far.
    bool partial = false;
    std::uint64_t evaluations = 0;
};

/// Witness-backed report reaching theorem_bound(q, m, parity). For odd m
/// and parity Odd the `lemma7` progression is negated (T_1 = -T_0).
BoundReport lemma_bound(std::uint64_t q, unsigned m, Parity parity);

struct SearchOptions {
    /// Maximum number of membership tests.
    std::uint64_t budget = 1ULL << 30;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Best BCH bound over every unit a and offset b: 1 + the longest run of
/// consecutive i with (b + a i) mod n in T, capped at n - 1 members.
/// Ties resolve to the smallest a, then the smallest b. Only the smallest
/// representative of each orbit {+-a q^j} is scanned when T is closed under
/// multiplication by q, which leaves the canonical witness unchanged.
BoundReport bch_search(const DefiningSet& T, const SearchOptions& opts = {});

}  // namespace tdcodes
