#include "gconv/proximal.hpp"

#include "gconv/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gconv {

bool is_proximal(const Graph& g, Vertex x0, const VertexSet& k) {
    if (k.empty() || k.contains(x0)) return false;
    return imprint(g, x0, k) == k && !convex_hull(g, k).contains(x0);
}

bool proximal_leq(const Graph& g, Vertex x0, const VertexSet& k, const VertexSet& k2) {
    return k.is_subset_of(vertex_shadow(g, k2, x0));
}

std::vector<VertexSet> proximal_sets(const Graph& g, Vertex x0, std::size_t max_n) {
    if (g.order() > max_n)
        throw Error(ErrorCode::too_large, "proximal-set enumeration is limited to n <= " + std::to_string(max_n));
    std::vector<VertexSet> out;
    VertexSet current = g.empty_set();
    // The proximal sets form a simplicial complex, so only proximal sets are extended.
    std::function<void(Vertex)> grow = [&](Vertex from) {
        for (Vertex v = from; v < g.order(); ++v) {
            if (v == x0) continue;
            current.insert(v);
            if (is_proximal(g, x0, current)) {
                out.push_back(current);
                grow(v + 1);
            }
            current.erase(v);
        }
    };
    grow(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_facet(const Graph& g, Vertex x0, const VertexSet& k) {
    for (Vertex y = 0; y < g.order(); ++y) {
        if (y == x0 || k.contains(y)) continue;
        VertexSet bigger = k;
        bigger.insert(y);
        if (is_proximal(g, x0, bigger)) return false;
    }
    return true;
}

bool satisfies_p3(const Graph& g, Vertex x0, const VertexSet& k) {
    for (Vertex y = 0; y < g.order(); ++y) {
        if (y == x0 || k.contains(y)) continue;
        const VertexSet r = vertex_shadow(g, VertexSet::singleton(g.order(), y), x0) & k;
        if (r.empty()) continue;
        VertexSet rest = k - r;
        rest.insert(y);
        if (!convex_hull(g, rest).contains(x0)) return false;
    }
    return true;
}

}  // namespace

bool is_max_proximal(const Graph& g, Vertex x0, const VertexSet& k, MaxProximalMode mode,
                     std::optional<bool> known_s3, std::size_t max_n) {
    if (mode == MaxProximalMode::p3 && known_s3 == false)
        throw Error(ErrorCode::mode_requires_s3, "P3 certificate is only valid on S3 graphs");
    if (!is_proximal(g, x0, k)) return false;
    if (mode == MaxProximalMode::p3) return is_facet(g, x0, k) && satisfies_p3(g, x0, k);

    auto dominates = [&](const VertexSet& other) {
        return other != k && is_proximal(g, x0, other) && proximal_leq(g, x0, k, other);
    };
    // Single-vertex exchanges find most dominating sets without the full search.
    for (Vertex y = 0; y < g.order(); ++y) {
        if (y == x0 || k.contains(y)) continue;
        VertexSet added = k;
        added.insert(y);
        if (dominates(added)) return false;
        VertexSet swapped = k - vertex_shadow(g, VertexSet::singleton(g.order(), y), x0);
        swapped.insert(y);
        if (dominates(swapped)) return false;
    }
    for (const auto& other : proximal_sets(g, x0, max_n))
        if (other != k && proximal_leq(g, x0, k, other)) return false;
    return true;
}

std::vector<PointedClique> pointed_maximal_cliques(const Graph& g) {
    std::vector<PointedClique> out;
    for (const auto& clique : maximal_cliques(g)) {
        if (clique.count() < 2) continue;
        for (Vertex x0 : clique) {
            VertexSet rest = clique;
            rest.erase(x0);
            out.push_back({x0, std::move(rest)});
        }
    }
    return out;
}

bool is_semispace(const Graph& g, const VertexSet& s, Vertex x0) {
    if (s.empty() || s.contains(x0) || !is_convex(g, s)) return false;
    for (Vertex y = 0; y < g.order(); ++y) {
        if (y == x0 || s.contains(y)) continue;
        if (!extend_hull(g, s, VertexSet::singleton(g.order(), y), ConvexityKind::geodesic).contains(x0))
            return false;
    }
    return true;
}

std::vector<SemispaceRecord> enumerate_semispaces_tc(const Graph& g) {
    if (auto tc = check_metric_condition(g, MetricCondition::tc); !tc.holds)
        throw Error(ErrorCode::precondition_violated, "graph violates the triangle condition");
    const auto cliques = maximal_cliques(g);
    std::vector<std::vector<char>> flagged(cliques.size());
    for (std::size_t i = 0; i < cliques.size(); ++i) flagged[i].assign(cliques[i].count(), 0);

    auto locate = [&](const VertexSet& clique, Vertex pole) -> std::optional<std::pair<std::size_t, std::size_t>> {
        auto it = std::lower_bound(cliques.begin(), cliques.end(), clique);
        if (it == cliques.end() || *it != clique) return std::nullopt;
        std::size_t pos = 0;
        for (Vertex v : *it) {
            if (v == pole) break;
            ++pos;
        }
        return std::make_pair(static_cast<std::size_t>(it - cliques.begin()), pos);
    };

    std::vector<SemispaceRecord> out;
    std::map<VertexSet, std::size_t> index_of;
    for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
        std::size_t pos = 0;
        for (Vertex x0 : cliques[ci]) {
            const std::size_t here = pos++;
            if (flagged[ci][here]) continue;
            flagged[ci][here] = 1;
            VertexSet k = cliques[ci];
            k.erase(x0);
            if (k.empty()) continue;
            const VertexSet s = vertex_shadow(g, k, x0);
            if (!is_semispace(g, s, x0) || !is_convex(g, s.complement()))
                throw Error(ErrorCode::precondition_violated,
                            "shadow at vertex " + std::to_string(x0) + " is not a halfspace semispace");
            std::size_t slot;
            if (auto found = index_of.find(s); found != index_of.end()) {
                slot = found->second;
            } else {
                slot = out.size();
                index_of.emplace(s, slot);
                out.push_back({{x0, s}, {}});
            }
            out[slot].generators.push_back({x0, k});

            for (Vertex y0 = 0; y0 < g.order(); ++y0) {
                if (s.contains(y0) || !g.neighborhood(y0).intersects(s)) continue;
                const VertexSet l = g.neighborhood(y0) & s;
                if (!is_pointed_maximal_clique(g, y0, l) || vertex_shadow(g, l, y0) != s) continue;
                VertexSet clique = l;
                clique.insert(y0);
                auto where = locate(clique, y0);
                if (!where || flagged[where->first][where->second]) continue;
                flagged[where->first][where->second] = 1;
                out[slot].generators.push_back({y0, l});
            }
        }
    }
    return out;
}

}  // namespace gconv
