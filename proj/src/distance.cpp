#include "tdcodes/distance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "tdcodes/error.hpp"
#include "tdcodes/kernels.hpp"
#include "tdcodes/numtheory.hpp"

namespace tdcodes {
namespace {

constexpr std::size_t kNoWeight = std::numeric_limits<std::size_t>::max();

// Bit-sliced layout: plane p of a length-len word occupies words [p*W, (p+1)*W).
struct Slicing {
    unsigned planes;
    std::size_t len;
    std::size_t words;
    std::size_t stride() const { return planes * words; }
};

void slice_into(std::span<const Symbol> v, const Slicing& sl, std::uint64_t* out) {
    std::fill(out, out + sl.stride(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (unsigned p = 0; p < sl.planes; ++p)
            if ((v[i] >> p) & 1) out[p * sl.words + i / 64] |= 1ULL << (i % 64);
}

std::vector<Symbol> unslice(const std::uint64_t* in, const Slicing& sl) {
    std::vector<Symbol> out(sl.len, 0);
    for (std::size_t i = 0; i < sl.len; ++i)
        for (unsigned p = 0; p < sl.planes; ++p)
            if ((in[p * sl.words + i / 64] >> (i % 64)) & 1) out[i] |= static_cast<Symbol>(1u << p);
    return out;
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
    unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(t, jobs)));
}

template <class Fn>
void run_jobs(std::size_t jobs, unsigned threads, Fn fn) {
    threads = resolve_threads(threads, jobs);
    if (threads == 1) {
        for (std::size_t j = 0; j < jobs; ++j) fn(j);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t j = t; j < jobs; j += threads) fn(j);
        });
}

// The row space of `basis` (full row rank) enumerated in q parts, one per
// value of the last message symbol; each part is a binary-reflected Gray
// walk over the remaining s(k-1) message bits. visit(part, sliced_word) is
// called once per codeword, zero word included.
class RowSpaceWalker {
public:
    RowSpaceWalker(const BaseField& f, const GfMatrix& basis)
        : sl_{f.degree(), basis.cols(), (basis.cols() + 63) / 64}, k_(basis.rows()) {
        const unsigned s = f.degree();
        gens_.assign(static_cast<std::size_t>(s) * k_ * sl_.stride(), 0);
        std::vector<Symbol> scaled(basis.cols());
        const auto& kern = kernels::active_kernels();
        for (std::size_t j = 0; j < k_; ++j)
            for (unsigned t = 0; t < s; ++t) {
                kern.mul_region(scaled.data(), basis.row(j).data(), f.table(static_cast<Symbol>(1u << t)),
                                scaled.size());
                slice_into(scaled, sl_, gen(j * s + t));
            }
    }

    const Slicing& slicing() const { return sl_; }
    std::size_t parts() const { return std::size_t{1} << sl_.planes; }
    std::uint64_t total_bits() const { return static_cast<std::uint64_t>(sl_.planes) * k_; }

    template <class Visit>
    void walk(std::size_t part, Visit&& visit) const {
        const auto& kern = kernels::active_kernels();
        const unsigned s = sl_.planes;
        std::vector<std::uint64_t> cur(sl_.stride(), 0);
        for (unsigned t = 0; t < s; ++t)
            if ((part >> t) & 1) kern.xor_words(cur.data(), gen((k_ - 1) * s + t), sl_.stride());
        const std::uint64_t low_bits = total_bits() - s;
        const std::uint64_t steps = 1ULL << low_bits;
        visit(cur.data());
        for (std::uint64_t c = 1; c < steps; ++c) {
            kern.xor_words(cur.data(), gen(static_cast<std::size_t>(std::countr_zero(c))), sl_.stride());
            visit(cur.data());
        }
    }

private:
    const std::uint64_t* gen(std::size_t b) const { return gens_.data() + b * sl_.stride(); }
    std::uint64_t* gen(std::size_t b) { return gens_.data() + b * sl_.stride(); }

    Slicing sl_;
    std::size_t k_;
    std::vector<std::uint64_t> gens_;
};

GfMatrix checked_basis(const BaseField& f, const GfMatrix& g, std::uint64_t cap) {
    GfMatrix basis = row_reduce(f, g).reduced;
    const std::uint64_t bits = static_cast<std::uint64_t>(f.degree()) * basis.rows();
    if (bits >= 63 || (1ULL << bits) > cap)
        throw BudgetExceeded("q^k codewords exceed the enumeration cap");
    return basis;
}

struct Candidate {
    std::size_t weight = kNoWeight;
    std::vector<Symbol> word;
};

// Weight scanning over combinations of at most `depth` rows (first row
// coefficient 1, others any nonzero scalar). Rows are in `order`
// coordinates; `unpermute` maps a scanned position back to the original one.
class ComboScanner {
public:
    ComboScanner(const BaseField& f, const GfMatrix& rows, std::span<const std::size_t> positions)
        : f_(f), sl_{f.degree(), rows.cols(), (rows.cols() + 63) / 64}, k_(rows.rows()), pos_(positions) {
        const auto& kern = kernels::active_kernels();
        const std::size_t q = f.size();
        scaled_.assign(k_ * (q - 1) * sl_.stride(), 0);
        std::vector<Symbol> tmp(rows.cols());
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t c = 1; c < q; ++c) {
                kern.mul_region(tmp.data(), rows.row(i).data(), f.table(static_cast<Symbol>(c)), tmp.size());
                slice_into(tmp, sl_, row(i, c));
            }
    }

    std::uint64_t evaluations() const { return evals_; }
    const Candidate& best() const { return best_; }

    void scan(unsigned depth) {
        const auto& kern = kernels::active_kernels();
        const std::size_t q = f_.size();
        for (std::size_t i = 0; i < k_; ++i) {
            consider(kern.sliced_weight(row(i, 1), sl_.planes, sl_.words), [&](std::uint64_t* out) {
                std::copy(row(i, 1), row(i, 1) + sl_.stride(), out);
            });
        }
        if (depth < 2) return;
        std::vector<std::uint64_t> pair(sl_.stride());
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j)
                for (std::size_t c = 1; c < q; ++c) {
                    const std::size_t w = kern.sliced_xor_weight(row(i, 1), row(j, c), sl_.planes, sl_.words);
                    consider(w, [&](std::uint64_t* out) {
                        std::copy(row(i, 1), row(i, 1) + sl_.stride(), out);
                        kern.xor_words(out, row(j, c), sl_.stride());
                    });
                    if (depth < 3) continue;
                    std::copy(row(i, 1), row(i, 1) + sl_.stride(), pair.begin());
                    kern.xor_words(pair.data(), row(j, c), sl_.stride());
                    for (std::size_t l = j + 1; l < k_; ++l)
                        for (std::size_t c3 = 1; c3 < q; ++c3) {
                            const std::size_t w3 =
                                kern.sliced_xor_weight(pair.data(), row(l, c3), sl_.planes, sl_.words);
                            consider(w3, [&](std::uint64_t* out) {
                                std::copy(pair.begin(), pair.end(), out);
                                kern.xor_words(out, row(l, c3), sl_.stride());
                            });
                        }
                }
    }

private:
    const std::uint64_t* row(std::size_t i, std::size_t c) const {
        return scaled_.data() + (i * (f_.size() - 1) + (c - 1)) * sl_.stride();
    }
    std::uint64_t* row(std::size_t i, std::size_t c) {
        return scaled_.data() + (i * (f_.size() - 1) + (c - 1)) * sl_.stride();
    }

    template <class Build>
    void consider(std::size_t w, Build&& build) {
        ++evals_;
        if (w == 0 || w >= best_.weight) return;
        std::vector<std::uint64_t> buf(sl_.stride());
        build(buf.data());
        const std::vector<Symbol> scanned = unslice(buf.data(), sl_);
        best_.word.assign(scanned.size(), 0);
        for (std::size_t p = 0; p < scanned.size(); ++p) best_.word[pos_[p]] = scanned[p];
        best_.weight = w;
    }

    const BaseField& f_;
    Slicing sl_;
    std::size_t k_;
    std::span<const std::size_t> pos_;
    std::vector<std::uint64_t> scaled_;
    Candidate best_;
    std::uint64_t evals_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Pair scanning of the given rows is skipped above this many weight evaluations.
constexpr std::uint64_t kPairPassLimit = 1ULL << 24;

}  // namespace

std::string_view method_name(DistanceMethod m) {
    switch (m) {
    case DistanceMethod::Exhaustive: return "exhaustive";
    case DistanceMethod::Sampled: return "sampled";
    case DistanceMethod::None: return "none";
    }
    return "none";
}

std::string_view verdict_name(EqualityVerdict v) {
    switch (v) {
    case EqualityVerdict::Equal: return "equal";
    case EqualityVerdict::Unequal: return "unequal";
    case EqualityVerdict::UpperBoundsAgree: return "upper_bounds_agree";
    case EqualityVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::size_t hamming_weight(std::span<const Symbol> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Symbol s) { return s != 0; }));
}

DistanceReport exact_distance(const BaseField& f, const GfMatrix& g, const ExactOptions& opts) {
    const GfMatrix basis = checked_basis(f, g, opts.cap);
    if (basis.rows() == 0) throw ParameterError("the zero code has no minimum distance");
    const RowSpaceWalker walker(f, basis);
    const auto& kern = kernels::active_kernels();
    const Slicing& sl = walker.slicing();

    std::vector<Candidate> best(walker.parts());
    run_jobs(walker.parts(), opts.threads, [&](std::size_t part) {
        Candidate& b = best[part];
        std::vector<std::uint64_t> keep;
        walker.walk(part, [&](const std::uint64_t* v) {
            const std::size_t w = kern.sliced_weight(v, sl.planes, sl.words);
            if (w != 0 && w < b.weight) {
                b.weight = w;
                keep.assign(v, v + sl.stride());
            }
        });
        if (b.weight != kNoWeight) b.word = unslice(keep.data(), sl);
    });

    const Candidate* top = &best[0];
    for (const Candidate& c : best)
        if (c.weight < top->weight) top = &c;
    DistanceReport r;
    r.exact = top->weight;
    r.upper = top->weight;
    r.witness = top->word;
    r.method = DistanceMethod::Exhaustive;
    r.evaluations = 1ULL << walker.total_bits();
    return r;
}

DistanceReport exact_distance(const CyclicCode& c, const ExactOptions& opts) {
    return exact_distance(c.field().base(), generator_matrix(c), opts);
}

DistanceReport sampled_upper(const BaseField& f, const GfMatrix& g, const SampleOptions& opts) {
    if (opts.info_weight < 1 || opts.info_weight > 3) throw ParameterError("info_weight must be 1, 2 or 3");
    const GfMatrix basis = row_reduce(f, g).reduced;
    const std::size_t k = basis.rows(), len = g.cols();
    if (k == 0) throw ParameterError("the zero code has no minimum distance");

    std::vector<std::size_t> identity(len);
    std::iota(identity.begin(), identity.end(), std::size_t{0});

    // Deterministic pass over the rows as given (for a cyclic code: the shifts of g).
    const std::uint64_t pair_cost = static_cast<std::uint64_t>(g.rows()) * g.rows() * (f.size() - 1) / 2;
    ComboScanner direct(f, g, identity);
    direct.scan(pair_cost <= kPairPassLimit ? 2 : 1);
    Candidate overall = direct.best();
    std::uint64_t evaluations = direct.evaluations();

    std::vector<Candidate> per_trial(opts.trials);
    std::vector<std::uint64_t> per_evals(opts.trials, 0);
    run_jobs(opts.trials, opts.threads, [&](std::size_t t) {
        std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(t)));
        std::vector<std::size_t> perm = identity;
        std::shuffle(perm.begin(), perm.end(), rng);
        GfMatrix permuted(k, len);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < len; ++c) permuted.at(r, c) = basis.at(r, perm[c]);
        const GfMatrix systematic = row_reduce(f, permuted).reduced;
        ComboScanner scanner(f, systematic, perm);
        scanner.scan(opts.info_weight);
        per_trial[t] = scanner.best();
        per_evals[t] = scanner.evaluations();
    });
    for (std::size_t t = 0; t < opts.trials; ++t) {
        evaluations += per_evals[t];
        if (per_trial[t].weight < overall.weight) overall = std::move(per_trial[t]);
    }

    DistanceReport r;
    r.upper = overall.weight;
    r.witness = std::move(overall.word);
    r.method = DistanceMethod::Sampled;
    r.seed = opts.seed;
    r.evaluations = evaluations;
    return r;
}

DistanceReport sampled_upper(const CyclicCode& c, const SampleOptions& opts) {
    return sampled_upper(c.field().base(), generator_matrix(c), opts);
}

DistanceReport measure_distance(const BaseField& f, const GfMatrix& g, const ExactOptions& exact,
                                const SampleOptions& sampled) {
    const std::uint64_t bits = static_cast<std::uint64_t>(f.degree()) * rank(f, g);
    if (bits < 63 && (1ULL << bits) <= exact.cap) return exact_distance(f, g, exact);
    return sampled_upper(f, g, sampled);
}

std::map<std::size_t, std::uint64_t> weight_distribution(const BaseField& f, const GfMatrix& g, std::uint64_t cap) {
    const GfMatrix basis = checked_basis(f, g, cap);
    std::map<std::size_t, std::uint64_t> out;
    if (basis.rows() == 0) {
        out[0] = 1;
        return out;
    }
    const RowSpaceWalker walker(f, basis);
    const auto& kern = kernels::active_kernels();
    const Slicing& sl = walker.slicing();
    std::vector<std::uint64_t> tally(g.cols() + 1, 0);
    for (std::size_t part = 0; part < walker.parts(); ++part)
        walker.walk(part, [&](const std::uint64_t* v) { ++tally[kern.sliced_weight(v, sl.planes, sl.words)]; });
    for (std::size_t w = 0; w < tally.size(); ++w)
        if (tally[w] != 0) out[w] = tally[w];
    return out;
}

std::vector<Symbol> apply_multiplier(std::span<const Symbol> word, std::int64_t v) {
    const std::uint64_t n = word.size();
    const std::uint64_t vr = nt::mod(v, n);
    if (std::gcd(vr, n) != 1) throw ParameterError("multiplier must be a unit modulo n");
    std::vector<Symbol> out(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) out[nt::mulmod(vr, i, n)] = word[i];
    return out;
}

bool multiplier_maps(const CyclicCode& from, const CyclicCode& to, std::int64_t v,
                     const std::vector<std::vector<Symbol>>& words) {
    for (const auto& w : words) {
        if (!is_codeword(from, w)) throw ParameterError("multiplier_maps: word is not in the source code");
        if (!is_codeword(to, apply_multiplier(w, v))) return false;
    }
    return true;
}

DuadicDistanceCheck verify_duadic_distance_equality(std::shared_ptr<const FieldTower> field,
                                                    const ExactOptions& exact, const SampleOptions& sampled) {
    if (field->m() % 2 == 0) throw ParameterError("duadic distance equality needs odd m");
    const CyclicCode c0 = base_code(field, Parity::Even);
    const CyclicCode c1 = base_code(field, Parity::Odd);
    const BaseField& f = field->base();
    const std::uint64_t bits = static_cast<std::uint64_t>(f.degree()) * c0.dimension();
    DuadicDistanceCheck out;
    if (bits < 63 && (1ULL << bits) <= exact.cap) {
        out.method = DistanceMethod::Exhaustive;
        out.even = exact_distance(c0, exact);
        out.odd = exact_distance(c1, exact);
        out.verdict = *out.even.exact == *out.odd.exact ? EqualityVerdict::Equal : EqualityVerdict::Unequal;
    } else {
        out.method = DistanceMethod::Sampled;
        out.even = sampled_upper(c0, sampled);
        out.odd = sampled_upper(c1, sampled);
        out.verdict = out.even.upper == out.odd.upper ? EqualityVerdict::UpperBoundsAgree
                                                      : EqualityVerdict::Inconclusive;
    }
    return out;
}

}  // namespace tdcodes
