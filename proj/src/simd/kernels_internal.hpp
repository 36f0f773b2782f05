#pragma once

#include "gconv/simd/kernels.hpp"

namespace gconv::simd::detail {

const KernelTable* avx2_kernels();

// Scalar remainders for the vector mask kernels; `out` words must already be cleared.
void tail_sum_equals(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t target,
                     std::size_t from, std::size_t n, std::uint64_t* out);
void tail_less(const std::uint16_t* a, const std::uint16_t* b, std::size_t from, std::size_t n,
               std::uint64_t* out);
void tail_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t from, std::size_t n,
                std::uint64_t* out);
void tail_value(const std::uint16_t* a, std::uint16_t value, std::size_t from, std::size_t n,
                std::uint64_t* out);

}  // namespace gconv::simd::detail
