#include "tdcodes/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace tdcodes::kernels {
namespace {

inline uint8x16_t gf_mul16(uint8x16_t x, uint8x16_t lo, uint8x16_t hi) {
    const uint8x16_t mask = vdupq_n_u8(0x0f);
    return veorq_u8(vqtbl1q_u8(lo, vandq_u8(x, mask)), vqtbl1q_u8(hi, vshrq_n_u8(x, 4)));
}

void mul_region(std::uint8_t* dst, const std::uint8_t* src, const MulTable& c, std::size_t len) {
    const uint8x16_t lo = vld1q_u8(c.lo.data());
    const uint8x16_t hi = vld1q_u8(c.hi.data());
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) vst1q_u8(dst + i, gf_mul16(vld1q_u8(src + i), lo, hi));
    for (; i < len; ++i) dst[i] = c.lo[src[i] & 15] ^ c.hi[src[i] >> 4];
}

void mul_add_region(std::uint8_t* dst, const std::uint8_t* src, const MulTable& c, std::size_t len) {
    const uint8x16_t lo = vld1q_u8(c.lo.data());
    const uint8x16_t hi = vld1q_u8(c.hi.data());
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16)
        vst1q_u8(dst + i, veorq_u8(vld1q_u8(dst + i), gf_mul16(vld1q_u8(src + i), lo, hi)));
    for (; i < len; ++i) dst[i] ^= c.lo[src[i] & 15] ^ c.hi[src[i] >> 4];
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] ^= src[i];
}

inline std::size_t popcount128(uint64x2_t v) {
    return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::size_t sliced_weight(const std::uint64_t* v, unsigned planes, std::size_t words) {
    std::size_t w = 0, i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t any = vdupq_n_u64(0);
        for (unsigned p = 0; p < planes; ++p) any = vorrq_u64(any, vld1q_u64(v + p * words + i));
        w += popcount128(any);
    }
    for (; i < words; ++i) {
        std::uint64_t any = 0;
        for (unsigned p = 0; p < planes; ++p) any |= v[p * words + i];
        w += static_cast<std::size_t>(__builtin_popcountll(any));
    }
    return w;
}

std::size_t sliced_xor_weight(const std::uint64_t* a, const std::uint64_t* b, unsigned planes,
                              std::size_t words) {
    std::size_t w = 0, i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t any = vdupq_n_u64(0);
        for (unsigned p = 0; p < planes; ++p)
            any = vorrq_u64(any, veorq_u64(vld1q_u64(a + p * words + i), vld1q_u64(b + p * words + i)));
        w += popcount128(any);
    }
    for (; i < words; ++i) {
        std::uint64_t any = 0;
        for (unsigned p = 0; p < planes; ++p) any |= a[p * words + i] ^ b[p * words + i];
        w += static_cast<std::size_t>(__builtin_popcountll(any));
    }
    return w;
}

constexpr KernelSet kNeon{"neon", mul_region, mul_add_region, xor_words, sliced_weight, sliced_xor_weight};

}  // namespace

const KernelSet* neon_kernels() { return &kNeon; }

}  // namespace tdcodes::kernels

#else

namespace tdcodes::kernels {
const KernelSet* neon_kernels() { return nullptr; }
}  // namespace tdcodes::kernels

#endif
