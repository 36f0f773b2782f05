#include "gconv/simd/kernels.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace gconv::simd;

namespace {

struct Lanes {
    std::vector<std::uint64_t> a, b;
};

Lanes random_words(std::size_t words, std::mt19937_64& rng) {
    Lanes l{std::vector<std::uint64_t>(words), std::vector<std::uint64_t>(words)};
    for (std::size_t i = 0; i < words; ++i) {
        l.a[i] = rng();
        l.b[i] = rng() & (rng() | rng());
    }
    return l;
}

std::vector<std::uint16_t> random_row(std::size_t n, std::uint16_t top, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, top);
    std::vector<std::uint16_t> row(n);
    for (auto& x : row) x = static_cast<std::uint16_t>(pick(rng));
    return row;
}

}  // namespace

TEST_CASE("vector kernels agree with the scalar kernels") {
    const KernelTable* fast = kernels_for(Isa::avx2);
    if (!fast) {
        MESSAGE("avx2 unavailable; only the scalar table is exercised");
        fast = &scalar_kernels();
    }
    const KernelTable& slow = scalar_kernels();
    std::mt19937_64 rng(2024);
    for (std::size_t words : {0, 1, 3, 4, 5, 8, 13, 32}) {
        for (int round = 0; round < 20; ++round) {
            auto l = random_words(words, rng);
            if (round % 5 == 0) l.b = l.a;
            if (round % 7 == 0)
                for (auto& w : l.b) w = 0;
            CHECK(fast->popcount(l.a.data(), words) == slow.popcount(l.a.data(), words));
            CHECK(fast->intersects(l.a.data(), l.b.data(), words) == slow.intersects(l.a.data(), l.b.data(), words));
            CHECK(fast->is_subset(l.b.data(), l.a.data(), words) == slow.is_subset(l.b.data(), l.a.data(), words));
            for (auto op : {&KernelTable::or_into, &KernelTable::and_into, &KernelTable::andnot_into}) {
                auto x = l.a, y = l.a;
                (fast->*op)(x.data(), l.b.data(), words);
                (slow.*op)(y.data(), l.b.data(), words);
                CHECK(x == y);
            }
        }
    }
    for (std::size_t n : {1, 7, 15, 16, 17, 31, 33, 64, 65, 100, 257}) {
        const std::size_t words = (n + 63) / 64;
        for (std::uint16_t top : {std::uint16_t{3}, std::uint16_t{40}, std::uint16_t{65535}}) {
            const auto a = random_row(n, top, rng), b = random_row(n, top, rng);
            const std::uint16_t target = a[n / 2] + b[n / 3];
            auto check = [&](auto&& call) {
                std::vector<std::uint64_t> x(words, ~std::uint64_t{0}), y(words, ~std::uint64_t{0});
                call(*fast, x.data());
                call(slow, y.data());
                CHECK(x == y);
                if (n % 64) CHECK((y.back() >> (n % 64)) == 0);
            };
            check([&](const KernelTable& t, std::uint64_t* out) {
                t.sum_equals_mask(a.data(), b.data(), target, n, out);
            });
            check([&](const KernelTable& t, std::uint64_t* out) { t.less_mask(a.data(), b.data(), n, out); });
            check([&](const KernelTable& t, std::uint64_t* out) { t.less_mask(b.data(), a.data(), n, out); });
            check([&](const KernelTable& t, std::uint64_t* out) { t.equal_mask(a.data(), a.data(), n, out); });
            check([&](const KernelTable& t, std::uint64_t* out) { t.equal_mask(a.data(), b.data(), n, out); });
            check([&](const KernelTable& t, std::uint64_t* out) { t.value_mask(a.data(), a[0], n, out); });
        }
    }
}

TEST_CASE("scalar mask kernels follow their definitions") {
    const KernelTable& k = scalar_kernels();
    const std::vector<std::uint16_t> a{0, 1, 2, 3, 4, 65535}, b{4, 3, 2, 1, 0, 1};
    std::uint64_t out = 0;
    k.sum_equals_mask(a.data(), b.data(), 4, a.size(), &out);
    CHECK(out == 0b011111);
    k.less_mask(a.data(), b.data(), a.size(), &out);
    CHECK(out == 0b000011);
    k.equal_mask(a.data(), b.data(), a.size(), &out);
    CHECK(out == 0b000100);
    k.value_mask(a.data(), 65535, a.size(), &out);
    CHECK(out == 0b100000);
}

TEST_CASE("dispatch honours the scalar pin") {
    const char* pin = std::getenv("GCONV_SIMD");
    if (pin && std::string_view{pin} == "scalar") CHECK(kernels().isa == Isa::scalar);
    else if (kernels_for(Isa::avx2)) CHECK(kernels().isa == Isa::avx2);
    CHECK(isa_name(Isa::scalar) == "scalar");
    CHECK(isa_name(Isa::avx2) == "avx2");
}
