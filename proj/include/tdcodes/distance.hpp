#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tdcodes/cyclic.hpp"
#include "tdcodes/matrix.hpp"

namespace tdcodes {

enum class DistanceMethod { Exhaustive, Sampled, None };
std::string_view method_name(DistanceMethod m);

/// Minimum-distance evidence for one code. `lower` comes from a BCH or
/// closed-form bound (1 when none is attached); `upper` is the weight of
/// `witness`, a nonzero codeword.
struct DistanceReport {
    std::optional<std::uint64_t> exact;
    std::uint64_t lower = 1;
    std::uint64_t upper = 0;
    std::vector<Symbol> witness;
    DistanceMethod method = DistanceMethod::None;
    std::optional<std::uint64_t> seed;
    std::uint64_t evaluations = 0;
};

struct ExactOptions {
    /// Maximum number of codewords to enumerate (q^k must not exceed it).
    std::uint64_t cap = 1ULL << 24;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Minimum nonzero weight of the row space of g by full enumeration. The
/// message space is split by its leading symbol and each part walked in
/// Gray-code order, one basis-vector XOR per codeword. The witness is the
/// first minimum-weight word in that order, independent of thread count.
/// Throws BudgetExceeded when q^rank > cap, ParameterError for the zero code.
DistanceReport exact_distance(const BaseField& f, const GfMatrix& g, const ExactOptions& opts = {});
DistanceReport exact_distance(const CyclicCode& c, const ExactOptions& opts = {});

struct SampleOptions {
    /// Random information sets to try.
    std::uint64_t trials = 64;
    std::uint64_t seed = 1;
    /// Nonzero information-set positions enumerated per trial (1..3).
    unsigned info_weight = 2;
    unsigned threads = 0;
};

/// Upper bound on the minimum distance. Scans every codeword that is a
/// combination of at most two rows of g, then for each trial draws a random
/// column order, puts g in systematic form on the first independent columns
/// and scans every combination of at most `info_weight` systematic rows.
/// Trial t depends only on (seed, t), so extending `trials` never raises
/// the result.
DistanceReport sampled_upper(const BaseField& f, const GfMatrix& g, const SampleOptions& opts = {});
DistanceReport sampled_upper(const CyclicCode& c, const SampleOptions& opts = {});

/// Exact when q^k <= cap, sampled otherwise.
DistanceReport measure_distance(const BaseField& f, const GfMatrix& g, const ExactOptions& exact,
                                const SampleOptions& sampled);

/// Weight -> number of codewords, over the whole row space (zero included).
/// Requires q^rank <= cap.
std::map<std::size_t, std::uint64_t> weight_distribution(const BaseField& f, const GfMatrix& g,
                                                         std::uint64_t cap = 1ULL << 20);

std::size_t hamming_weight(std::span<const Symbol> word);

/// Word with coordinate i moved to (v i) mod n, i.e. c(x) -> c(x^v).
std::vector<Symbol> apply_multiplier(std::span<const Symbol> word, std::int64_t v);

/// Every given codeword of `from`, permuted by x -> x^v, is a codeword of `to`.
bool multiplier_maps(const CyclicCode& from, const CyclicCode& to, std::int64_t v,
                     const std::vector<std::vector<Symbol>>& words);

/// Equal / Unequal come from exact distances; UpperBoundsAgree and
/// Inconclusive from sampled upper bounds.
enum class EqualityVerdict { Equal, Unequal, UpperBoundsAgree, Inconclusive };
std::string_view verdict_name(EqualityVerdict v);

struct DuadicDistanceCheck {
    DistanceMethod method = DistanceMethod::None;
    DistanceReport even;  // C_(q,m;0)
    DistanceReport odd;   // C_(q,m;1)
    EqualityVerdict verdict = EqualityVerdict::Inconclusive;
};

/// d(C_(q,m;0)) == d(C_(q,m;1)) for odd m. Exact when both dimensions fit
/// the cap; otherwise both codes are sampled with the same options, and
/// unequal upper bounds are reported as inconclusive.
DuadicDistanceCheck verify_duadic_distance_equality(std::shared_ptr<const FieldTower> field,
                                                    const ExactOptions& exact, const SampleOptions& sampled);

}  // namespace tdcodes
