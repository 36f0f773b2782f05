#pragma once

#include "gconv/convexity.hpp"

#include <cstddef>
#include <vector>

namespace gconv {

inline constexpr std::size_t default_oracle_max_n = 18;
inline constexpr std::size_t default_semispace_max_n = 14;

// Every kind-convex set (∅ and V included), sorted. Throws Error{too_large}.
[[nodiscard]] std::vector<VertexSet> enumerate_convex_sets(const Graph& g, ConvexityKind kind,
                                                           std::size_t max_n = default_oracle_max_n);

struct SemispaceClass {
    VertexSet members;
    std::vector<Vertex> attaching;  // ascending
};

// Maximal convex sets avoiding some vertex, one entry per member set, sorted by members.
[[nodiscard]] std::vector<SemispaceClass> enumerate_semispaces_bruteforce(
    const Graph& g, ConvexityKind kind, std::size_t max_n = default_semispace_max_n);

// conv(∅) = ∅ inside these definitions.
[[nodiscard]] std::size_t helly_number(const Graph& g, ConvexityKind kind,
                                       std::size_t max_n = default_oracle_max_n);
[[nodiscard]] std::size_t radon_number(const Graph& g, ConvexityKind kind,
                                       std::size_t max_n = default_oracle_max_n);
[[nodiscard]] std::size_t caratheodory_number(const Graph& g, ConvexityKind kind,
                                              std::size_t max_n = default_oracle_max_n);

}  // namespace gconv
