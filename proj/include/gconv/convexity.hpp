#pragma once

#include "gconv/graph.hpp"
#include "gconv/metric.hpp"

#include <optional>
#include <string_view>

namespace gconv {

enum class ConvexityKind { geodesic, monophonic, gated };

std::string_view to_string(ConvexityKind kind);
std::optional<ConvexityKind> parse_convexity_kind(std::string_view name);

// Hulls throw Error{empty_input} on an empty seed.
[[nodiscard]] VertexSet convex_hull(const Graph& g, const VertexSet& s);
[[nodiscard]] VertexSet monophonic_hull(const Graph& g, const VertexSet& s);
[[nodiscard]] VertexSet gated_hull(const Graph& g, const VertexSet& s);
[[nodiscard]] VertexSet hull(const Graph& g, const VertexSet& s, ConvexityKind kind);
// hull(closed ∪ extra) for a `kind`-convex `closed`; reuses the closed part.
[[nodiscard]] VertexSet extend_hull(const Graph& g, const VertexSet& closed, const VertexSet& extra,
                                    ConvexityKind kind);

// The empty set counts as convex, gated and Δ-closed.
[[nodiscard]] bool is_convex(const Graph& g, const VertexSet& s);
[[nodiscard]] bool is_convex(const Graph& g, const VertexSet& s, ConvexityKind kind);
[[nodiscard]] bool is_locally_convex(const Graph& g, const VertexSet& s);
[[nodiscard]] bool is_monophonic_convex(const Graph& g, const VertexSet& s);
[[nodiscard]] bool is_gated(const Graph& g, const VertexSet& s);
[[nodiscard]] bool is_delta_closed(const Graph& g, const VertexSet& s);
[[nodiscard]] std::optional<Vertex> gate(const Graph& g, Vertex x, const VertexSet& h);

// A/B: vertices x whose hull with B meets A. Throws on empty a or b.
[[nodiscard]] VertexSet shadow(const Graph& g, const VertexSet& a, const VertexSet& b,
                               ConvexityKind kind = ConvexityKind::geodesic);
// A/x0
[[nodiscard]] VertexSet vertex_shadow(const Graph& g, const VertexSet& a, Vertex x0);
// x0|K: union of x0/y over y in K
[[nodiscard]] VertexSet union_shadow(const Graph& g, Vertex x0, const VertexSet& k);
// W_=(K): vertices equidistant to every member of K
[[nodiscard]] VertexSet equidistant_set(const Graph& g, const VertexSet& k);
// x0//K; throws Error{not_pointed_maximal_clique}.
[[nodiscard]] VertexSet extended_shadow(const Graph& g, Vertex x0, const VertexSet& k);
// Interval form of K/x0 against x0//K for a clique K ∪ {x0}: z lies toward K
// when some y in K is strictly closer to z than x0. The two sides partition V
// and coincide with the hull-based shadows whenever intervals are convex.
struct CliqueSplit {
    VertexSet toward_k;
    VertexSet toward_x0;
};
[[nodiscard]] CliqueSplit clique_split(const Graph& g, Vertex x0, const VertexSet& k);

[[nodiscard]] bool is_pointed_maximal_clique(const Graph& g, Vertex x0, const VertexSet& k);

[[nodiscard]] VertexSet imprint(const Graph& g, Vertex x0, const VertexSet& a);

struct WPartition {
    VertexSet closer_to_u;  // W(u,v)
    VertexSet closer_to_v;  // W(v,u)
    VertexSet equidistant;  // W_=(u,v)
};
[[nodiscard]] WPartition w_partition(const Graph& g, Vertex u, Vertex v);

[[nodiscard]] VertexSet join(const Graph& g, const VertexSet& a, const VertexSet& b);

// Tuples: Peano (u,v,w,x,y), Pasch (w,u,v,x,y), sandglass (u,u',v,v',x,y).
[[nodiscard]] ConditionWitness check_peano(const Graph& g);
[[nodiscard]] ConditionWitness check_pasch(const Graph& g);
[[nodiscard]] ConditionWitness check_sandglass(const Graph& g);

enum class ShadowKind { set, vertex, union_of_vertices, extended };

struct ShadowSpec {
    ShadowKind kind = ShadowKind::set;
    VertexSet base;  // A, or K for union/extended shadows
    VertexSet pole;  // B, or the singleton {x0}
};

[[nodiscard]] VertexSet evaluate(const Graph& g, const ShadowSpec& spec);

}  // namespace gconv
