#include "gconv/simd/kernels.hpp"
#include "kernels_internal.hpp"

#include <cstdlib>
#include <string_view>

namespace gconv::simd {

const KernelTable* kernels_for(Isa isa) {
    switch (isa) {
    case Isa::scalar: return &scalar_kernels();
    case Isa::avx2: return detail::avx2_kernels();
    }
    return nullptr;
}

const KernelTable& kernels() {
    static const KernelTable& active = [] () -> const KernelTable& {
        const char* pin = std::getenv("GCONV_SIMD");
        if (pin && std::string_view{pin} == "scalar") return scalar_kernels();
        if (const auto* t = detail::avx2_kernels()) return *t;
        return scalar_kernels();
    }();
    return active;
}

std::string_view isa_name(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

}  // namespace gconv::simd
