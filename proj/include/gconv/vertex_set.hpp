#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gconv {

using Vertex = std::uint32_t;

// Dense bitset over the vertex universe {0, ..., universe-1}.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const std::uint64_t* words, std::size_t count, std::size_t word)
            : words_(words), count_(count), word_(word) {
            if (word_ < count_) bits_ = words_[word_];
            settle();
        }

        Vertex operator*() const {
            return static_cast<Vertex>(word_ * 64 + static_cast<std::size_t>(std::countr_zero(bits_)));
        }
        const_iterator& operator++() {
            bits_ &= bits_ - 1;
            settle();
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& o) const { return word_ == o.word_ && bits_ == o.bits_; }

    private:
        void settle() {
            while (bits_ == 0 && word_ < count_) {
                if (++word_ < count_) bits_ = words_[word_];
            }
        }

        const std::uint64_t* words_ = nullptr;
        std::size_t count_ = 0;
        std::size_t word_ = 0;
        std::uint64_t bits_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet singleton(std::size_t universe, Vertex v);

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool empty() const;
    [[nodiscard]] bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear();

    [[nodiscard]] std::optional<Vertex> first() const;
    [[nodiscard]] bool intersects(const VertexSet& other) const;
    [[nodiscard]] bool is_subset_of(const VertexSet& other) const;
    [[nodiscard]] VertexSet complement() const;
    [[nodiscard]] std::vector<Vertex> to_vector() const;
    [[nodiscard]] std::string to_string() const;  // "0,3,5"

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    // Lexicographic on the sorted member lists.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

    [[nodiscard]] const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
    [[nodiscard]] const_iterator end() const { return {words_.data(), words_.size(), words_.size()}; }

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::span<std::uint64_t> words() noexcept { return words_; }
    [[nodiscard]] std::size_t hash() const noexcept;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace gconv
