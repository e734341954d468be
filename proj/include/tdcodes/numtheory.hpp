#pragma once

#include <cstdint>
#include <vector>

// Integer helpers shared by the field and coset code. All arithmetic is on
// unsigned 64-bit values; products go through 128-bit intermediates.
namespace tdcodes::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// base^exp, throwing ParameterError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in ascending order (empty for n <= 1).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Reduce a possibly negative integer into [0, n).
constexpr std::uint64_t mod(std::int64_t v, std::uint64_t n) {
    const auto sn = static_cast<std::int64_t>(n);
    std::int64_t r = v % sn;
    if (r < 0) r += sn;
    return static_cast<std::uint64_t>(r);
}

/// Inverse of a modulo n; requires gcd(a, n) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);

}  // namespace tdcodes::nt
