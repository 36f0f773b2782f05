#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace gconv::simd {

enum class Isa { scalar, avx2 };

// Word-level set algebra and distance-row masks. Mask kernels overwrite
// ceil(n/64) output words and leave bits at positions >= n cleared.
struct KernelTable {
    Isa isa;
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
    bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // bit i set iff a[i] + b[i] == target
    void (*sum_equals_mask)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t target,
                            std::size_t n, std::uint64_t* out);
    // bit i set iff a[i] < b[i]
    void (*less_mask)(const std::uint16_t* a, const std::uint16_t* b, std::size_t n,
                      std::uint64_t* out);
    // bit i set iff a[i] == b[i]
    void (*equal_mask)(const std::uint16_t* a, const std::uint16_t* b, std::size_t n,
                       std::uint64_t* out);
    // bit i set iff a[i] == value
    void (*value_mask)(const std::uint16_t* a, std::uint16_t value, std::size_t n,
                       std::uint64_t* out);
};

const KernelTable& scalar_kernels();
// nullptr when the build or the CPU lacks the instruction set.
const KernelTable* kernels_for(Isa isa);

// Best available table; GCONV_SIMD=scalar in the environment pins the scalar path.
const KernelTable& kernels();

std::string_view isa_name(Isa isa);

}  // namespace gconv::simd
