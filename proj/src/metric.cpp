#include "gconv/metric.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace gconv {

bool is_metric_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
    auto only = [&](Vertex p, Vertex q, Vertex r) {
        VertexSet meet = g.interval(p, q) & g.interval(p, r);
        return meet.count() == 1 && meet.contains(p);
    };
    return only(a, b, c) && only(b, a, c) && only(c, a, b);
}

MetricTriangle metric_triangle_of(const Graph& g, Vertex x, Vertex y, Vertex z) {
    const VertexSet near_x = g.interval(x, y) & g.interval(x, z);
    const VertexSet near_y = g.interval(y, x) & g.interval(y, z);
    const VertexSet near_z = g.interval(z, x) & g.interval(z, y);
    for (Vertex v1 : near_x)
        for (Vertex v2 : near_y) {
            if (g.dist(x, y) != g.dist(x, v1) + g.dist(v1, v2) + g.dist(v2, y)) continue;
            for (Vertex v3 : near_z) {
                if (g.dist(x, z) != g.dist(x, v1) + g.dist(v1, v3) + g.dist(v3, z)) continue;
                if (g.dist(y, z) != g.dist(y, v2) + g.dist(v2, v3) + g.dist(v3, z)) continue;
                if (!is_metric_triangle(g, v1, v2, v3)) continue;
                return {v1, v2, v3, g.dist(v1, v2)};
            }
        }
    // Unreachable: a quasi-median always exists.
    return {x, x, x, 0};
}

namespace {

ConditionWitness holds(std::string name) { return {std::move(name), true, {}}; }
ConditionWitness fails(std::string name, std::vector<Vertex> tuple) {
    return {std::move(name), false, std::move(tuple)};
}

VertexSet common_neighbors(const Graph& g, Vertex v, Vertex w) {
    return g.neighborhood(v) & g.neighborhood(w);
}

ConditionWitness check_tc(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v)) {
                if (w < v || g.dist(u, v) != g.dist(u, w) || g.dist(u, v) < 2) continue;
                bool found = false;
                for (Vertex x : common_neighbors(g, v, w))
                    if (g.dist(u, x) + 1 == g.dist(u, v)) { found = true; break; }
                if (!found) return fails("TC", {u, v, w});
            }
    return holds("TC");
}

ConditionWitness check_qc(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w = v + 1; w < n; ++w) {
                if (g.dist(v, w) != 2 || g.dist(u, v) != g.dist(u, w) || g.dist(u, v) < 2) continue;
                const VertexSet common = common_neighbors(g, v, w);
                bool has_down = false;
                for (Vertex x : common)
                    if (g.dist(u, x) + 1 == g.dist(u, v)) { has_down = true; break; }
                if (has_down) continue;
                for (Vertex z : common)
                    if (g.dist(u, z) == g.dist(u, v) + 1) return fails("QC", {u, v, w, z});
            }
    return holds("QC");
}

ConditionWitness check_qc_minus(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w = v + 1; w < n; ++w) {
                if (g.dist(v, w) != 2) continue;
                const unsigned bound = unsigned{g.dist(u, v)} + g.dist(u, w);
                bool found = false;
                for (Vertex x : common_neighbors(g, v, w))
                    if (2u * g.dist(u, x) <= bound) { found = true; break; }
                if (!found) return fails("QC-", {u, v, w});
            }
    return holds("QC-");
}

ConditionWitness check_pc(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    // Induced squares v1 v2 v3 v4 with v1 the smallest id and v2 < v4.
    std::vector<std::array<Vertex, 4>> squares;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex c = a + 1; c < n; ++c) {
            if (g.adjacent(a, c)) continue;
            std::vector<Vertex> mids;
            for (Vertex m : common_neighbors(g, a, c))
                if (m > a) mids.push_back(m);
            for (std::size_t i = 0; i < mids.size(); ++i)
                for (std::size_t j = i + 1; j < mids.size(); ++j)
                    if (!g.adjacent(mids[i], mids[j])) squares.push_back({a, mids[i], c, mids[j]});
        }
    std::sort(squares.begin(), squares.end());
    for (Vertex b = 0; b < n; ++b)
        for (const auto& s : squares)
            if (g.dist(b, s[0]) + g.dist(b, s[2]) != g.dist(b, s[1]) + g.dist(b, s[3]))
                return fails("PC", {b, s[0], s[1], s[2], s[3]});
    return holds("PC");
}

}  // namespace

ConditionWitness check_metric_condition(const Graph& g, MetricCondition kind) {
    switch (kind) {
    case MetricCondition::tc: return check_tc(g);
    case MetricCondition::qc: return check_qc(g);
    case MetricCondition::qc_minus: return check_qc_minus(g);
    case MetricCondition::pc: return check_pc(g);
    }
    return holds("?");
}

ConditionWitness is_meshed(const Graph& g) {
    auto w = check_qc_minus(g);
    w.condition = "meshed";
    return w;
}

ConditionWitness is_weakly_modular(const Graph& g) {
    auto w = check_tc(g);
    if (w.holds) w = check_qc(g);
    w.condition = "weakly-modular";
    return w;
}

bool is_bipartite(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.dist(0, u) == g.dist(0, v)) return false;
    return true;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty()) {
        if (x.empty()) out.push_back(r);
        return;
    }
    // Pivot maximizing |P ∩ N(u)| over P ∪ X.
    Vertex pivot = 0;
    std::size_t best = 0;
    bool chosen = false;
    for (const VertexSet* side : {&p, &x})
        for (Vertex u : *side) {
            std::size_t c = (p & g.neighborhood(u)).count();
            if (!chosen || c > best) { pivot = u; best = c; chosen = true; }
        }
    for (Vertex v : p - g.neighborhood(pivot)) {
        r.insert(v);
        bron_kerbosch(g, r, p & g.neighborhood(v), x & g.neighborhood(v), out);
        r.erase(v);
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet r = g.empty_set();
    bron_kerbosch(g, r, g.all(), g.empty_set(), out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) {
        VertexSet others = s;
        others.erase(v);
        if (!others.is_subset_of(g.neighborhood(v))) return false;
    }
    return true;
}

std::size_t clique_number(const Graph& g) {
    std::size_t best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max(best, c.count());
    return best;
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern) {
    const std::size_t k = pattern.order();
    if (k > g.order()) return std::nullopt;
    std::vector<Vertex> image(k);
    VertexSet used = g.empty_set();
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == k) return true;
        for (Vertex cand = 0; cand < g.order(); ++cand) {
            if (used.contains(cand) || g.degree(cand) < pattern.degree(static_cast<Vertex>(i))) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = g.adjacent(cand, image[j]) ==
                     pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
            if (!ok) continue;
            image[i] = cand;
            used.insert(cand);
            if (extend(i + 1)) return true;
            used.erase(cand);
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return image;
}

std::optional<std::vector<Vertex>> dismantling_order(const Graph& g) {
    VertexSet alive = g.all();
    std::vector<Vertex> removed;
    while (alive.count() > 1) {
        std::optional<Vertex> pick;
        for (Vertex v : alive) {
            VertexSet closed_v = g.neighborhood(v) & alive;
            closed_v.insert(v);
            for (Vertex u : g.neighborhood(v) & alive) {
                VertexSet closed_u = g.neighborhood(u) & alive;
                closed_u.insert(u);
                if (closed_v.is_subset_of(closed_u)) { pick = v; break; }
            }
            if (pick) break;
        }
        if (!pick) return std::nullopt;
        removed.push_back(*pick);
        alive.erase(*pick);
    }
    removed.push_back(*alive.first());
    std::reverse(removed.begin(), removed.end());
    return removed;
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    auto start = s.first();
    if (!start) return true;
    VertexSet seen = g.empty_set(), frontier = g.empty_set();
    seen.insert(*start);
    frontier.insert(*start);
    while (!frontier.empty()) {
        VertexSet next = g.empty_set();
        for (Vertex v : frontier) next |= g.neighborhood(v);
        next &= s;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == s;
}

}  // namespace gconv
