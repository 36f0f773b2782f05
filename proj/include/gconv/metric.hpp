#pragma once

#include "gconv/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gconv {

struct MetricTriangle {
    Vertex v1 = 0, v2 = 0, v3 = 0;
    Distance size = 0;  // d(v1,v2); the triangle is equilateral when all three sides agree
};

[[nodiscard]] bool is_metric_triangle(const Graph& g, Vertex a, Vertex b, Vertex c);

// Lex-first quasi-median (v1 near x, v2 near y, v3 near z).
[[nodiscard]] MetricTriangle metric_triangle_of(const Graph& g, Vertex x, Vertex y, Vertex z);

struct ConditionWitness {
    std::string condition;
    bool holds = true;
    std::vector<Vertex> tuple;  // minimal violating tuple when !holds
};

enum class MetricCondition { tc, qc, qc_minus, pc };

// Violation tuples: TC/QC⁻ (u,v,w), QC (u,v,w,z), PC (b,v1,v2,v3,v4).
[[nodiscard]] ConditionWitness check_metric_condition(const Graph& g, MetricCondition kind);
[[nodiscard]] ConditionWitness is_meshed(const Graph& g);
[[nodiscard]] ConditionWitness is_weakly_modular(const Graph& g);
[[nodiscard]] bool is_bipartite(const Graph& g);

// Sorted lexicographically by member list.
[[nodiscard]] std::vector<VertexSet> maximal_cliques(const Graph& g);
[[nodiscard]] bool is_clique(const Graph& g, const VertexSet& s);
[[nodiscard]] std::size_t clique_number(const Graph& g);

// embedding[i] is the image of pattern vertex i; lex-first image tuple.
[[nodiscard]] std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern);

[[nodiscard]] std::optional<std::vector<Vertex>> dismantling_order(const Graph& g);

[[nodiscard]] bool is_connected_subset(const Graph& g, const VertexSet& s);

}  // namespace gconv
