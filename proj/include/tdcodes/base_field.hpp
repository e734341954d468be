#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdcodes/kernels.hpp"

namespace tdcodes {

/// An element of GF(2^s), s <= 8: the coefficient bit vector of its
/// polynomial-basis representation over GF(2). 0 and 1 are the identities.
using Symbol = std::uint8_t;

/// GF(q), q = 2^s, built as GF(2)[x] / (modulus). The class of x is the
/// primitive element written w in rendered output.
class BaseField {
public:
    /// Builds GF(2^s) for 1 <= s <= 8. `modulus` is a bit mask including the
    /// x^s term; when omitted the smallest primitive polynomial is used.
    /// Throws FieldError if the modulus is reducible or not primitive.
    explicit BaseField(unsigned s, std::optional<std::uint32_t> modulus = std::nullopt);

    unsigned degree() const noexcept { return s_; }
    std::uint32_t size() const noexcept { return q_; }
    std::uint32_t modulus() const noexcept { return modulus_; }

    Symbol add(Symbol a, Symbol b) const noexcept { return a ^ b; }
    Symbol mul(Symbol a, Symbol b) const noexcept { return mul_[static_cast<std::size_t>(a) * q_ + b]; }
    Symbol inv(Symbol a) const;
    Symbol pow(Symbol a, std::int64_t e) const;

    /// w^i.
    Symbol exp(std::uint64_t i) const noexcept { return exp_[i % (q_ - 1)]; }
    /// Discrete log to base w; `a` must be nonzero.
    unsigned log(Symbol a) const;

    /// Split-nibble table for multiplication by c, as consumed by the kernels.
    const kernels::MulTable& table(Symbol c) const noexcept { return tables_[c]; }

    /// "0", "1", "w" or "w^k".
    std::string render(Symbol a) const;

    /// Smallest primitive polynomial of degree s over GF(2), by integer value.
    static std::uint32_t default_modulus(unsigned s);
    static bool is_irreducible(std::uint32_t poly);
    /// True iff `poly` (degree s) is irreducible and x has order 2^s - 1 modulo it.
    static bool is_primitive(std::uint32_t poly);

private:
    unsigned s_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::vector<Symbol> mul_;
    std::vector<Symbol> exp_;
    std::vector<unsigned> log_;
    std::vector<kernels::MulTable> tables_;
};

}  // namespace tdcodes
