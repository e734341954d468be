#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

// Data-parallel inner loops. Every kernel has a portable scalar reference;
// AVX2 (x86-64) and NEON (AArch64) variants are picked at runtime and are
// required to agree with the reference bit for bit.
namespace tdcodes::kernels {

/// Split-nibble multiplication table for a fixed GF(2^s) multiplier c, s <= 8:
/// c * x == lo[x & 15] ^ hi[x >> 4].
struct MulTable {
    alignas(16) std::array<std::uint8_t, 16> lo{};
    alignas(16) std::array<std::uint8_t, 16> hi{};
};

struct KernelSet {
    const char* name;

    // dst[i] = c * src[i]
    void (*mul_region)(std::uint8_t* dst, const std::uint8_t* src, const MulTable& c, std::size_t len);
    // dst[i] ^= c * src[i]
    void (*mul_add_region)(std::uint8_t* dst, const std::uint8_t* src, const MulTable& c, std::size_t len);
    // dst[i] ^= src[i]
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // Hamming weight of a bit-sliced GF(2^s) vector: popcount of the OR of its
    // `planes` bit planes, each `words` 64-bit words long, stored plane-major.
    std::size_t (*sliced_weight)(const std::uint64_t* v, unsigned planes, std::size_t words);
    // Weight of (a ^ b) for two bit-sliced vectors, without materialising it.
    std::size_t (*sliced_xor_weight)(const std::uint64_t* a, const std::uint64_t* b, unsigned planes,
                                     std::size_t words);
};

const KernelSet& scalar_kernels();

/// nullptr when not compiled in or not supported by the running CPU.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelSet*> available_kernels();

/// The variant used by the library. Picks the widest available set unless
/// TD_KERNELS=scalar is set in the environment.
const KernelSet& active_kernels();

}  // namespace tdcodes::kernels
