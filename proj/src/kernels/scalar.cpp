#include <bit>

#include "tdcodes/kernels.hpp"

namespace tdcodes::kernels {
namespace {

void mul_region(std::uint8_t* dst, const std::uint8_t* src, const MulTable& c, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) dst[i] = c.lo[src[i] & 15] ^ c.hi[src[i] >> 4];
}

void mul_add_region(std::uint8_t* dst, const std::uint8_t* src, const MulTable& c, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) dst[i] ^= c.lo[src[i] & 15] ^ c.hi[src[i] >> 4];
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t sliced_weight(const std::uint64_t* v, unsigned planes, std::size_t words) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t any = 0;
        for (unsigned p = 0; p < planes; ++p) any |= v[p * words + i];
        w += static_cast<std::size_t>(std::popcount(any));
    }
    return w;
}

std::size_t sliced_xor_weight(const std::uint64_t* a, const std::uint64_t* b, unsigned planes,
                              std::size_t words) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t any = 0;
        for (unsigned p = 0; p < planes; ++p) any |= a[p * words + i] ^ b[p * words + i];
        w += static_cast<std::size_t>(std::popcount(any));
    }
    return w;
}

constexpr KernelSet kScalar{"scalar", mul_region, mul_add_region, xor_words, sliced_weight, sliced_xor_weight};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

}  // namespace tdcodes::kernels
