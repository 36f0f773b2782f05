#pragma once

#include "gconv/convexity.hpp"

#include <optional>
#include <vector>

namespace gconv {

struct PointedClique {
    Vertex x0 = 0;
    VertexSet k;  // the clique minus x0
    friend bool operator==(const PointedClique&, const PointedClique&) = default;
};

struct Semispace {
    Vertex attaching_vertex = 0;
    VertexSet members;
};

struct SemispaceRecord {
    Semispace semispace;
    std::vector<PointedClique> generators;
};

enum class MaxProximalMode { definitional, p3 };

[[nodiscard]] bool is_proximal(const Graph& g, Vertex x0, const VertexSet& k);
// K ⪯ K' at x0, i.e. K ⊆ K'/x0
[[nodiscard]] bool proximal_leq(const Graph& g, Vertex x0, const VertexSet& k, const VertexSet& k2);

// Definitional mode searches the whole proximal complex at x0 (guarded by
// max_n). P3 mode throws Error{mode_requires_s3} when known_s3 is false.
[[nodiscard]] bool is_max_proximal(const Graph& g, Vertex x0, const VertexSet& k, MaxProximalMode mode,
                                   std::optional<bool> known_s3 = std::nullopt, std::size_t max_n = 20);

// Every proximal set at x0 (non-empty), ascending. Exponential; guarded by max_n.
[[nodiscard]] std::vector<VertexSet> proximal_sets(const Graph& g, Vertex x0, std::size_t max_n = 20);

// Cliques in lexicographic order, poles ascending within each clique.
[[nodiscard]] std::vector<PointedClique> pointed_maximal_cliques(const Graph& g);

[[nodiscard]] bool is_semispace(const Graph& g, const VertexSet& s, Vertex x0);

// Requires TC and S3; throws Error{precondition_violated} when an emitted
// shadow is not a semispace with convex complement, or TC fails.
[[nodiscard]] std::vector<SemispaceRecord> enumerate_semispaces_tc(const Graph& g);

}  // namespace gconv
