#pragma once

#include "gconv/convexity.hpp"
#include "gconv/oracles.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gconv {

// Normalized so that h1 holds vertex 0.
struct HalfspacePair {
    VertexSet h1;
    VertexSet h2;
    ConvexityKind kind = ConvexityKind::geodesic;
    friend bool operator==(const HalfspacePair& a, const HalfspacePair& b) {
        return a.kind == b.kind && a.h1 == b.h1 && a.h2 == b.h2;
    }
};

[[nodiscard]] bool is_halfspace_pair(const Graph& g, const VertexSet& h1, const VertexSet& h2, ConvexityKind kind);
[[nodiscard]] HalfspacePair make_halfspace_pair(VertexSet h1, VertexSet h2, ConvexityKind kind);

enum class HalfspaceStrategy { bruteforce, bipartite, gated_edges, dismantling };

std::string_view to_string(HalfspaceStrategy strategy);
std::optional<HalfspaceStrategy> parse_halfspace_strategy(std::string_view name);

// Sorted by h1. Throws Error{strategy_inapplicable | hereditary_dismantling_failed | too_large}.
[[nodiscard]] std::vector<HalfspacePair> enumerate_halfspaces(const Graph& g, ConvexityKind kind,
                                                              HalfspaceStrategy strategy,
                                                              std::size_t max_n = default_oracle_max_n);

enum class SeparationStatus { separable, not_separable, unknown };

std::string_view to_string(SeparationStatus status);

struct SeparationResult {
    SeparationStatus status = SeparationStatus::unknown;
    std::optional<HalfspacePair> pair;  // h1 ⊇ a, h2 ⊇ b (not normalized)
    std::string reason;
};

[[nodiscard]] SeparationResult greedy_separation(const Graph& g, ConvexityKind kind, const VertexSet& a,
                                                 const VertexSet& b);

struct ShadowClosure {
    bool disjoint = false;
    VertexSet a;
    VertexSet b;
};

[[nodiscard]] ShadowClosure shadow_closure(const Graph& g, ConvexityKind kind, const VertexSet& a,
                                           const VertexSet& b);

// Geodesic residues fall back to halfspace enumeration when n <= max_n.
[[nodiscard]] SeparationResult three_step_separation(const Graph& g, ConvexityKind kind, const VertexSet& a,
                                                     const VertexSet& b, std::size_t max_n = default_oracle_max_n);
[[nodiscard]] SeparationResult separate_gated(const Graph& g, const VertexSet& a, const VertexSet& b);
[[nodiscard]] SeparationResult separate_monophonic(const Graph& g, const VertexSet& a, const VertexSet& b);

struct Literal {
    std::uint32_t variable = 0;
    bool positive = true;
};

struct TwoSatInstance {
    std::size_t variables = 0;
    std::vector<std::pair<Literal, Literal>> clauses;

    void add_clause(Literal a, Literal b) { clauses.emplace_back(a, b); }
    void require_equal(std::uint32_t x, std::uint32_t y) {
        add_clause({x, true}, {y, false});
        add_clause({x, false}, {y, true});
    }
    void require_different(std::uint32_t x, std::uint32_t y) {
        add_clause({x, true}, {y, true});
        add_clause({x, false}, {y, false});
    }
};

[[nodiscard]] std::optional<std::vector<bool>> two_sat_solve(const TwoSatInstance& inst);

}  // namespace gconv
