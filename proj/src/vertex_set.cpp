#include "gconv/vertex_set.hpp"

#include "gconv/simd/kernels.hpp"

#include <algorithm>
#include <cassert>

namespace gconv {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) {
        assert(v < universe);
        insert(v);
    }
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::singleton(std::size_t universe, Vertex v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
}

std::size_t VertexSet::count() const { return simd::kernels().popcount(words_.data(), words_.size()); }

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::optional<Vertex> VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
}

bool VertexSet::intersects(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    return simd::kernels().intersects(words_.data(), other.words_.data(), words_.size());
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    return simd::kernels().is_subset(words_.data(), other.words_.data(), words_.size());
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
    std::string out;
    for (Vertex v : *this) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    simd::kernels().or_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    simd::kernels().and_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    simd::kernels().andnot_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ea = a.end();
    auto ib = b.begin(), eb = b.end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (*ia != *ib) return *ia <=> *ib;
    }
    if (ia == ea && ib == eb) return a.universe_ <=> b.universe_;
    return ia == ea ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t VertexSet::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (std::uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace gconv
