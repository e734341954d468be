#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "tdcodes/base_field.hpp"
#include "tdcodes/kernels.hpp"

using namespace tdcodes;
using kernels::KernelSet;

namespace {

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t len, unsigned q) {
    std::vector<std::uint8_t> v(len);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % q);
    return v;
}

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t len) {
    std::vector<std::uint64_t> v(len);
    for (auto& x : v) x = rng();
    return v;
}

}  // namespace

TEST_CASE("scalar kernels are always available and listed first") {
    const auto all = kernels::available_kernels();
    REQUIRE(!all.empty());
    CHECK(all.front() == &kernels::scalar_kernels());
    CHECK(std::string(kernels::active_kernels().name).size() > 0);
}

TEST_CASE("mul tables agree with field multiplication") {
    for (unsigned s = 1; s <= 8; ++s) {
        const BaseField f(s);
        for (unsigned c = 0; c < f.size(); ++c)
            for (unsigned x = 0; x < f.size(); ++x) {
                const auto& t = f.table(static_cast<Symbol>(c));
                CHECK((t.lo[x & 15] ^ t.hi[x >> 4]) == f.mul(static_cast<Symbol>(c), static_cast<Symbol>(x)));
            }
    }
}

TEST_CASE("every kernel variant matches the scalar reference") {
    const KernelSet& ref = kernels::scalar_kernels();
    std::mt19937_64 rng(7);
    const BaseField f(8);
    for (const KernelSet* k : kernels::available_kernels()) {
        CAPTURE(std::string(k->name));
        for (std::size_t len : {0u, 1u, 15u, 16u, 17u, 31u, 32u, 33u, 63u, 64u, 100u, 257u, 1000u}) {
            for (std::size_t offset : {0u, 1u, 3u}) {
                const auto src = random_bytes(rng, len + offset, 256);
                const auto base = random_bytes(rng, len + offset, 256);
                for (unsigned c : {0u, 1u, 2u, 0x53u, 0xffu, static_cast<unsigned>(rng() % 256)}) {
                    auto a = base, b = base;
                    ref.mul_region(a.data() + offset, src.data() + offset, f.table(static_cast<Symbol>(c)), len);
                    k->mul_region(b.data() + offset, src.data() + offset, f.table(static_cast<Symbol>(c)), len);
                    CHECK(a == b);
                    a = base;
                    b = base;
                    ref.mul_add_region(a.data() + offset, src.data() + offset, f.table(static_cast<Symbol>(c)),
                                       len);
                    k->mul_add_region(b.data() + offset, src.data() + offset, f.table(static_cast<Symbol>(c)),
                                      len);
                    CHECK(a == b);
                }
            }
        }
        for (std::size_t words : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 64u}) {
            for (unsigned planes = 1; planes <= 8; ++planes) {
                const auto x = random_words(rng, planes * words);
                auto y = random_words(rng, planes * words);
                // Sparse planes exercise the OR across planes.
                for (auto& w : y) w &= rng();
                CHECK(ref.sliced_weight(x.data(), planes, words) == k->sliced_weight(x.data(), planes, words));
                CHECK(ref.sliced_xor_weight(x.data(), y.data(), planes, words) ==
                      k->sliced_xor_weight(x.data(), y.data(), planes, words));
                auto a = x, b = x;
                ref.xor_words(a.data(), y.data(), a.size());
                k->xor_words(b.data(), y.data(), b.size());
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("scalar sliced weight counts nonzero symbols") {
    // Two planes, one word: symbols at positions 0 (1), 5 (2), 9 (3).
    std::vector<std::uint64_t> v{(1ULL << 0) | (1ULL << 9), (1ULL << 5) | (1ULL << 9)};
    CHECK(kernels::scalar_kernels().sliced_weight(v.data(), 2, 1) == 3);
    std::vector<std::uint64_t> w{1ULL << 0, 0};
    CHECK(kernels::scalar_kernels().sliced_xor_weight(v.data(), w.data(), 2, 1) == 2);
}

TEST_CASE("TD_KERNELS=scalar pins the active set") {
    const char* env = std::getenv("TD_KERNELS");
    if (env && std::string(env) == "scalar") CHECK(&kernels::active_kernels() == &kernels::scalar_kernels());
}
