#include "gconv/simd/kernels.hpp"
#include "kernels_internal.hpp"

#include <bit>

namespace gconv::simd {
namespace {

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

template <class Pred>
void build_mask(std::size_t n, std::uint64_t* out, Pred pred) {
    std::size_t words = (n + 63) / 64;
    for (std::size_t w = 0; w < words; ++w) out[w] = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) out[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void sum_equals_mask(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t target,
                     std::size_t n, std::uint64_t* out) {
    build_mask(n, out, [&](std::size_t i) { return a[i] + b[i] == target; });
}

void less_mask(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::uint64_t* out) {
    build_mask(n, out, [&](std::size_t i) { return a[i] < b[i]; });
}

void equal_mask(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::uint64_t* out) {
    build_mask(n, out, [&](std::size_t i) { return a[i] == b[i]; });
}

void value_mask(const std::uint16_t* a, std::uint16_t value, std::size_t n, std::uint64_t* out) {
    build_mask(n, out, [&](std::size_t i) { return a[i] == value; });
}

const KernelTable table{Isa::scalar, or_into,         and_into,  andnot_into, popcount,
                        intersects,  is_subset,       sum_equals_mask, less_mask, equal_mask,
                        value_mask};

}  // namespace

const KernelTable& scalar_kernels() { return table; }

namespace detail {

void tail_sum_equals(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t target,
                     std::size_t from, std::size_t n, std::uint64_t* out) {
    for (std::size_t i = from; i < n; ++i)
        if (a[i] + b[i] == target) out[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void tail_less(const std::uint16_t* a, const std::uint16_t* b, std::size_t from, std::size_t n,
               std::uint64_t* out) {
    for (std::size_t i = from; i < n; ++i)
        if (a[i] < b[i]) out[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void tail_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t from, std::size_t n,
                std::uint64_t* out) {
    for (std::size_t i = from; i < n; ++i)
        if (a[i] == b[i]) out[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void tail_value(const std::uint16_t* a, std::uint16_t value, std::size_t from, std::size_t n,
                std::uint64_t* out) {
    for (std::size_t i = from; i < n; ++i)
        if (a[i] == value) out[i >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace detail
}  // namespace gconv::simd
