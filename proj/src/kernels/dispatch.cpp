#include <cstdlib>
#include <string_view>

#include "tdcodes/kernels.hpp"

namespace tdcodes::kernels {

std::vector<const KernelSet*> available_kernels() {
    std::vector<const KernelSet*> out{&scalar_kernels()};
    if (const auto* k = avx2_kernels()) out.push_back(k);
    if (const auto* k = neon_kernels()) out.push_back(k);
    return out;
}

const KernelSet& active_kernels() {
    static const KernelSet& chosen = [] () -> const KernelSet& {
        const char* env = std::getenv("TD_KERNELS");
        if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
        if (const auto* k = avx2_kernels()) return *k;
        if (const auto* k = neon_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace tdcodes::kernels
