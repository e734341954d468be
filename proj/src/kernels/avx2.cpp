#include "tdcodes/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

#define TD_AVX2 __attribute__((target("avx2")))

namespace tdcodes::kernels {
namespace {

TD_AVX2 inline __m256i gf_mul32(__m256i x, __m256i lo, __m256i hi, __m256i mask) {
    const __m256i l = _mm256_and_si256(x, mask);
    const __m256i h = _mm256_and_si256(_mm256_srli_epi16(x, 4), mask);
    return _mm256_xor_si256(_mm256_shuffle_epi8(lo, l), _mm256_shuffle_epi8(hi, h));
}

TD_AVX2 void mul_region(std::uint8_t* dst, const std::uint8_t* src, const MulTable& c, std::size_t len) {
    const __m256i lo = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(c.lo.data())));
    const __m256i hi = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(c.hi.data())));
    const __m256i mask = _mm256_set1_epi8(0x0f);
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), gf_mul32(x, lo, hi, mask));
    }
    for (; i < len; ++i) dst[i] = c.lo[src[i] & 15] ^ c.hi[src[i] >> 4];
}

TD_AVX2 void mul_add_region(std::uint8_t* dst, const std::uint8_t* src, const MulTable& c, std::size_t len) {
    const __m256i lo = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(c.lo.data())));
    const __m256i hi = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(c.hi.data())));
    const __m256i mask = _mm256_set1_epi8(0x0f);
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        d = _mm256_xor_si256(d, gf_mul32(x, lo, hi, mask));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
    }
    for (; i < len; ++i) dst[i] ^= c.lo[src[i] & 15] ^ c.hi[src[i] >> 4];
}

TD_AVX2 void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

// Nibble-lookup popcount, summed into four 64-bit lanes.
TD_AVX2 inline __m256i popcount_lanes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i mask = _mm256_set1_epi8(0x0f);
    const __m256i l = _mm256_shuffle_epi8(lookup, _mm256_and_si256(v, mask));
    const __m256i h = _mm256_shuffle_epi8(lookup, _mm256_and_si256(_mm256_srli_epi16(v, 4), mask));
    return _mm256_sad_epu8(_mm256_add_epi8(l, h), _mm256_setzero_si256());
}

TD_AVX2 inline std::size_t horizontal_sum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

TD_AVX2 std::size_t sliced_weight(const std::uint64_t* v, unsigned planes, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i any = _mm256_setzero_si256();
        for (unsigned p = 0; p < planes; ++p)
            any = _mm256_or_si256(any, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + p * words + i)));
        acc = _mm256_add_epi64(acc, popcount_lanes(any));
    }
    std::size_t w = horizontal_sum(acc);
    for (; i < words; ++i) {
        std::uint64_t any = 0;
        for (unsigned p = 0; p < planes; ++p) any |= v[p * words + i];
        w += static_cast<std::size_t>(__builtin_popcountll(any));
    }
    return w;
}

TD_AVX2 std::size_t sliced_xor_weight(const std::uint64_t* a, const std::uint64_t* b, unsigned planes,
                                      std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i any = _mm256_setzero_si256();
        for (unsigned p = 0; p < planes; ++p) {
            const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + p * words + i));
            const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + p * words + i));
            any = _mm256_or_si256(any, _mm256_xor_si256(x, y));
        }
        acc = _mm256_add_epi64(acc, popcount_lanes(any));
    }
    std::size_t w = horizontal_sum(acc);
    for (; i < words; ++i) {
        std::uint64_t any = 0;
        for (unsigned p = 0; p < planes; ++p) any |= a[p * words + i] ^ b[p * words + i];
        w += static_cast<std::size_t>(__builtin_popcountll(any));
    }
    return w;
}

constexpr KernelSet kAvx2{"avx2", mul_region, mul_add_region, xor_words, sliced_weight, sliced_xor_weight};

}  // namespace

const KernelSet* avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

}  // namespace tdcodes::kernels

#else

namespace tdcodes::kernels {
const KernelSet* avx2_kernels() { return nullptr; }
}  // namespace tdcodes::kernels

#endif
