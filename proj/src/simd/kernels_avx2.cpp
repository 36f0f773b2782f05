#include "kernels_internal.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

#define GCONV_AVX2 __attribute__((target("avx2,popcnt")))

namespace gconv::simd::detail {
namespace {

GCONV_AVX2 void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        auto s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), s));
    }
    for (; i < words; ++i) dst[i] |= src[i];
}

GCONV_AVX2 void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        auto s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(d, _mm256_and_si256(_mm256_loadu_si256(d), s));
    }
    for (; i < words; ++i) dst[i] &= src[i];
}

GCONV_AVX2 void andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        auto s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(d, _mm256_andnot_si256(s, _mm256_loadu_si256(d)));
    }
    for (; i < words; ++i) dst[i] &= ~src[i];
}

GCONV_AVX2 std::size_t popcount(const std::uint64_t* a, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i)
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    return total;
}

GCONV_AVX2 bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        auto x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        auto y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(x, y)) return true;
    }
    for (; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

GCONV_AVX2 bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        auto x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        auto y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // testc(y, x) is 1 when x & ~y == 0
        if (!_mm256_testc_si256(y, x)) return false;
    }
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

GCONV_AVX2 inline __m256i load16(const std::uint16_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Packs two 16-lane 0/-1 compare results into 32 consecutive bits.
GCONV_AVX2 inline std::uint32_t pack_bits(__m256i lo, __m256i hi) {
    __m256i packed = _mm256_packs_epi16(lo, hi);
    packed = _mm256_permute4x64_epi64(packed, 0xD8);
    return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
}

GCONV_AVX2 inline void put_bits(std::uint64_t* out, std::size_t pos, std::uint32_t bits) {
    out[pos >> 6] |= static_cast<std::uint64_t>(bits) << (pos & 63);
}

void clear(std::uint64_t* out, std::size_t n) {
    for (std::size_t w = 0, words = (n + 63) / 64; w < words; ++w) out[w] = 0;
}

GCONV_AVX2 inline __m256i sum_equals16(__m256i a, __m256i b, __m256i t) {
    __m256i within = _mm256_cmpeq_epi16(_mm256_max_epu16(a, t), t);
    __m256i matches = _mm256_cmpeq_epi16(b, _mm256_sub_epi16(t, a));
    return _mm256_and_si256(within, matches);
}

GCONV_AVX2 void sum_equals_mask(const std::uint16_t* a, const std::uint16_t* b,
                                std::uint16_t target, std::size_t n, std::uint64_t* out) {
    clear(out, n);
    const __m256i t = _mm256_set1_epi16(static_cast<short>(target));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i lo = sum_equals16(load16(a + i), load16(b + i), t);
        __m256i hi = sum_equals16(load16(a + i + 16), load16(b + i + 16), t);
        put_bits(out, i, pack_bits(lo, hi));
    }
    tail_sum_equals(a, b, target, i, n, out);
}

GCONV_AVX2 inline __m256i less16(__m256i a, __m256i b) {
    const __m256i bias = _mm256_set1_epi16(static_cast<short>(0x8000));
    return _mm256_cmpgt_epi16(_mm256_xor_si256(b, bias), _mm256_xor_si256(a, bias));
}

GCONV_AVX2 void less_mask(const std::uint16_t* a, const std::uint16_t* b, std::size_t n,
                          std::uint64_t* out) {
    clear(out, n);
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i lo = less16(load16(a + i), load16(b + i));
        __m256i hi = less16(load16(a + i + 16), load16(b + i + 16));
        put_bits(out, i, pack_bits(lo, hi));
    }
    tail_less(a, b, i, n, out);
}

GCONV_AVX2 void equal_mask(const std::uint16_t* a, const std::uint16_t* b, std::size_t n,
                           std::uint64_t* out) {
    clear(out, n);
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i lo = _mm256_cmpeq_epi16(load16(a + i), load16(b + i));
        __m256i hi = _mm256_cmpeq_epi16(load16(a + i + 16), load16(b + i + 16));
        put_bits(out, i, pack_bits(lo, hi));
    }
    tail_equal(a, b, i, n, out);
}

GCONV_AVX2 void value_mask(const std::uint16_t* a, std::uint16_t value, std::size_t n,
                           std::uint64_t* out) {
    clear(out, n);
    const __m256i v = _mm256_set1_epi16(static_cast<short>(value));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i lo = _mm256_cmpeq_epi16(load16(a + i), v);
        __m256i hi = _mm256_cmpeq_epi16(load16(a + i + 16), v);
        put_bits(out, i, pack_bits(lo, hi));
    }
    tail_value(a, value, i, n, out);
}

const KernelTable table{Isa::avx2, or_into,         and_into,  andnot_into, popcount,
                        intersects, is_subset,       sum_equals_mask, less_mask, equal_mask,
                        value_mask};

}  // namespace

const KernelTable* avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &table : nullptr;
}

}  // namespace gconv::simd::detail

#else

namespace gconv::simd::detail {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace gconv::simd::detail

#endif
