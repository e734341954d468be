#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tdcodes {

/// Parity of the q-weight selecting a defining set:
/// Even -> T_(q,m;0), Odd -> T_(q,m;1).
enum class Parity { Even = 0, Odd = 1 };

constexpr int parity_index(Parity p) { return p == Parity::Even ? 0 : 1; }
constexpr Parity other(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

/// A subset of Z_n tagged with n and q. Stored sorted with a bitset mirror
/// for constant-time membership. Inputs are reduced into [0, n) on entry.
///
/// A defining set is expected to be a union of q-cyclotomic cosets; the
/// constructor does not enforce this so that arbitrary subsets can be
/// passed to checks such as splitting_check. Consumers that need closure
/// call is_coset_closed().
class DefiningSet {
public:
    static constexpr std::uint64_t kMaxModulus = 1ULL << 24;

    DefiningSet(std::uint64_t n, std::uint64_t q, const std::vector<std::int64_t>& residues = {});

    static DefiningSet full(std::uint64_t n, std::uint64_t q);

    /// Members are exactly the r in [0, n) with pred(r).
    template <class Pred>
    static DefiningSet from_predicate(std::uint64_t n, std::uint64_t q, Pred pred) {
        DefiningSet out(n, q);
        for (std::uint64_t r = 0; r < n; ++r)
            if (pred(r)) out.insert_sorted(r);
        return out;
    }

    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& elems() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }

    /// `r` must already lie in [0, n).
    bool contains(std::uint64_t r) const noexcept { return (bits_[r >> 6] >> (r & 63)) & 1; }
    const std::vector<std::uint64_t>& bits() const noexcept { return bits_; }

    bool is_coset_closed() const;

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.elems_ == b.elems_;
    }

private:
    void insert_sorted(std::uint64_t r);

    std::uint64_t n_;
    std::uint64_t q_;
    std::vector<std::uint32_t> elems_;
    std::vector<std::uint64_t> bits_;
};

/// Base-q digits d_0..d_(m-1) of i (least significant first); i <= q^m - 1.
std::vector<std::uint64_t> q_adic_digits(std::uint64_t i, std::uint64_t q, unsigned m);
/// Digit sum of the base-q expansion; i <= q^m - 1.
std::uint64_t q_weight(std::uint64_t i, std::uint64_t q, unsigned m);

/// {i q^j mod n}, sorted ascending. Requires gcd(n, q) = 1.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t q, std::uint64_t n);

/// Partition of Z_n into q-cyclotomic cosets.
class CosetPartition {
public:
    CosetPartition(std::uint64_t q, std::uint64_t n);

    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t q() const noexcept { return q_; }
    /// Coset leaders (minimum of each coset), ascending.
    const std::vector<std::uint32_t>& leaders() const noexcept { return leaders_; }
    std::uint64_t leader_of(std::uint64_t r) const { return leader_of_.at(r); }
    /// Members of the coset led by `leader`, ascending.
    std::vector<std::uint64_t> coset(std::uint64_t leader) const;
    std::size_t coset_size(std::uint64_t leader) const;

private:
    std::uint64_t q_;
    std::uint64_t n_;
    std::vector<std::uint32_t> leaders_;
    std::vector<std::uint32_t> leader_of_;
};

/// n = q^m - 1 for q a power of two >= 2 and m >= 2; throws ParameterError.
std::uint64_t code_length(std::uint64_t q, unsigned m);

/// T_(q,m;parity): residues 1 <= i <= n-1 whose q-weight has the given parity.
DefiningSet build_T(std::uint64_t q, unsigned m, Parity parity);

DefiningSet negate_set(const DefiningSet& s);
/// {v x mod n : x in S}; v need not be a unit.
DefiningSet scale_set(std::int64_t v, const DefiningSet& s);
DefiningSet complement_set(const DefiningSet& s);
/// Z_n \ (-S): the defining set of the dual code.
DefiningSet dual_defining_set(const DefiningSet& s);

struct SplittingCheck {
    bool holds = false;
    std::string reason;
    explicit operator bool() const noexcept { return holds; }
};

/// Whether (s1, s2, v) is a splitting of Z_n: disjoint, union Z_n \ {0},
/// both coset-closed, v a unit, v s1 = s2 and v s2 = s1.
SplittingCheck splitting_check(const DefiningSet& s1, const DefiningSet& s2, std::int64_t v);

/// gcd(q^m - 1, q^l + 1) == 1. Throws ParameterError unless q is a power of
/// two, m >= 2, l >= 1 and m / gcd(l, m) is odd.
bool gcd_lemma5_check(std::uint64_t q, std::uint64_t l, unsigned m);

/// wt_q(A q^h - 1 - i) == (q-1) h + A - 1 - wt_q(i) for every
/// 0 <= i <= A q^h - 1. Requires q >= 3, m >= 2, 2 <= A <= q-1, 0 <= h <= m-1.
bool lemma6_check(std::uint64_t q, unsigned m, std::uint64_t A, unsigned h);

}  // namespace tdcodes
