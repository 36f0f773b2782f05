#include "gconv/separation.hpp"

#include "gconv/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gconv {

bool is_halfspace_pair(const Graph& g, const VertexSet& h1, const VertexSet& h2, ConvexityKind kind) {
    return !h1.empty() && !h2.empty() && !h1.intersects(h2) && (h1 | h2).count() == g.order() &&
           is_convex(g, h1, kind) && is_convex(g, h2, kind);
}

HalfspacePair make_halfspace_pair(VertexSet h1, VertexSet h2, ConvexityKind kind) {
    if (!h1.contains(0)) std::swap(h1, h2);
    return {std::move(h1), std::move(h2), kind};
}

std::string_view to_string(HalfspaceStrategy strategy) {
    switch (strategy) {
    case HalfspaceStrategy::bruteforce: return "bruteforce";
    case HalfspaceStrategy::bipartite: return "bipartite";
    case HalfspaceStrategy::gated_edges: return "gated_edges";
    case HalfspaceStrategy::dismantling: return "dismantling";
    }
    return "?";
}

std::optional<HalfspaceStrategy> parse_halfspace_strategy(std::string_view name) {
    if (name == "bruteforce") return HalfspaceStrategy::bruteforce;
    if (name == "bipartite") return HalfspaceStrategy::bipartite;
    if (name == "gated_edges" || name == "gated-edges") return HalfspaceStrategy::gated_edges;
    if (name == "dismantling") return HalfspaceStrategy::dismantling;
    return std::nullopt;
}

std::string_view to_string(SeparationStatus status) {
    switch (status) {
    case SeparationStatus::separable: return "separable";
    case SeparationStatus::not_separable: return "not_separable";
    case SeparationStatus::unknown: return "unknown";
    }
    return "?";
}

namespace {

[[noreturn]] void inapplicable(const std::string& what) { throw Error(ErrorCode::strategy_inapplicable, what); }

class PairCollector {
public:
    PairCollector(const Graph& g, ConvexityKind kind) : g_(g), kind_(kind) {}

    void offer(const VertexSet& h1, const VertexSet& h2) {
        if (!is_halfspace_pair(g_, h1, h2, kind_)) return;
        auto pair = make_halfspace_pair(h1, h2, kind_);
        if (seen_.insert(pair.h1).second) pairs_.push_back(std::move(pair));
    }

    std::vector<HalfspacePair> take() {
        std::sort(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) { return a.h1 < b.h1; });
        return std::move(pairs_);
    }

private:
    const Graph& g_;
    ConvexityKind kind_;
    std::set<VertexSet> seen_;
    std::vector<HalfspacePair> pairs_;
};

std::vector<HalfspacePair> bruteforce_halfspaces(const Graph& g, ConvexityKind kind, std::size_t max_n) {
    PairCollector out(g, kind);
    for (const auto& c : enumerate_convex_sets(g, kind, max_n))
        if (c.contains(0) && c.count() < g.order()) out.offer(c, c.complement());
    return out.take();
}

std::vector<HalfspacePair> edge_halfspaces(const Graph& g, ConvexityKind kind) {
    PairCollector out(g, kind);
    for (auto [u, v] : g.edges()) {
        auto w = w_partition(g, u, v);
        if (w.equidistant.empty()) out.offer(w.closer_to_u, w.closer_to_v);
    }
    return out.take();
}

std::vector<HalfspacePair> dismantling_halfspaces(const Graph& g) {
    if (!is_meshed(g).holds) inapplicable("dismantling strategy needs a meshed graph");
    auto order = dismantling_order(g);
    if (!order) throw Error(ErrorCode::hereditary_dismantling_failed, "graph has no dismantling order");
    // Pairs in local ids: vertex order[j] has local id j in every prefix.
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    for (std::size_t i = 2; i <= order->size(); ++i) {
        const Graph prefix = g.induced(std::span<const Vertex>(order->data(), i));
        if (!is_meshed(prefix).holds)
            throw Error(ErrorCode::hereditary_dismantling_failed,
                        "prefix of length " + std::to_string(i) + " is not meshed");
        const auto v = static_cast<Vertex>(i - 1);
        auto widen = [&](const VertexSet& s) {
            VertexSet out(i);
            for (Vertex x : s) out.insert(x);
            return out;
        };
        PairCollector lifted(prefix, ConvexityKind::geodesic);
        for (const auto& [h1, h2] : pairs) {
            VertexSet a = widen(h1), b = widen(h2);
            VertexSet a_v = a, b_v = b;
            a_v.insert(v);
            b_v.insert(v);
            lifted.offer(a_v, b);
            lifted.offer(a, b_v);
        }
        VertexSet lone = VertexSet::singleton(i, v);
        lifted.offer(lone, lone.complement());
        pairs.clear();
        for (auto& p : lifted.take()) pairs.emplace_back(std::move(p.h1), std::move(p.h2));
    }
    PairCollector out(g, ConvexityKind::geodesic);
    for (const auto& [h1, h2] : pairs) {
        VertexSet a = g.empty_set(), b = g.empty_set();
        for (Vertex x : h1) a.insert((*order)[x]);
        for (Vertex x : h2) b.insert((*order)[x]);
        out.offer(a, b);
    }
    return out.take();
}

}  // namespace

std::vector<HalfspacePair> enumerate_halfspaces(const Graph& g, ConvexityKind kind, HalfspaceStrategy strategy,
                                                std::size_t max_n) {
    switch (strategy) {
    case HalfspaceStrategy::bruteforce: return bruteforce_halfspaces(g, kind, max_n);
    case HalfspaceStrategy::bipartite:
        if (kind != ConvexityKind::geodesic) inapplicable("bipartite strategy needs geodesic convexity");
        if (!is_bipartite(g)) inapplicable("bipartite strategy needs a bipartite graph");
        return edge_halfspaces(g, kind);
    case HalfspaceStrategy::gated_edges:
        if (kind != ConvexityKind::gated) inapplicable("gated_edges strategy needs gated convexity");
        return edge_halfspaces(g, kind);
    case HalfspaceStrategy::dismantling:
        if (kind != ConvexityKind::geodesic) inapplicable("dismantling strategy needs geodesic convexity");
        return dismantling_halfspaces(g);
    }
    return {};
}

namespace {

SeparationResult separable(const Graph& g, ConvexityKind kind, VertexSet h1, VertexSet h2, const VertexSet& a,
                           const VertexSet& b) {
    if (!is_halfspace_pair(g, h1, h2, kind) || !a.is_subset_of(h1) || !b.is_subset_of(h2))
        return {SeparationStatus::unknown, std::nullopt, "assembled pair failed verification"};
    return {SeparationStatus::separable, HalfspacePair{std::move(h1), std::move(h2), kind}, {}};
}

SeparationResult not_separable(std::string reason) {
    return {SeparationStatus::not_separable, std::nullopt, std::move(reason)};
}

SeparationResult unknown(std::string reason) { return {SeparationStatus::unknown, std::nullopt, std::move(reason)}; }

void require_inputs(const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::empty_input, "separation needs two non-empty sets");
}

}  // namespace

SeparationResult greedy_separation(const Graph& g, ConvexityKind kind, const VertexSet& a, const VertexSet& b) {
    require_inputs(a, b);
    VertexSet ha = hull(g, a, kind), hb = hull(g, b, kind);
    if (ha.intersects(hb)) return not_separable("hulls intersect");
    auto single = [&](Vertex x) { return VertexSet::singleton(g.order(), x); };

    if (hb.count() == 1 || ha.count() == 1) {
        // Grow the other side to a semispace at the lone vertex.
        const bool flip = hb.count() != 1;
        VertexSet grow = flip ? hb : ha;
        const VertexSet pole = flip ? ha : hb;
        for (bool changed = true; changed;) {
            changed = false;
            for (Vertex y = 0; y < g.order(); ++y) {
                if (grow.contains(y) || pole.contains(y)) continue;
                VertexSet next = extend_hull(g, grow, single(y), kind);
                if (!next.intersects(pole)) {
                    grow = std::move(next);
                    changed = true;
                }
            }
        }
        VertexSet rest = grow.complement();
        auto result = flip ? separable(g, kind, rest, grow, a, b) : separable(g, kind, grow, rest, a, b);
        if (result.status != SeparationStatus::separable) result.reason = "semispace complement is not convex";
        return result;
    }

    for (;;) {
        VertexSet open = (ha | hb).complement();
        auto x = open.first();
        if (!x) break;
        VertexSet grown_a = extend_hull(g, ha, single(*x), kind);
        if (!grown_a.intersects(hb)) {
            ha = std::move(grown_a);
            continue;
        }
        VertexSet grown_b = extend_hull(g, hb, single(*x), kind);
        if (!grown_b.intersects(ha)) {
            hb = std::move(grown_b);
            continue;
        }
        return unknown("stuck at vertex " + std::to_string(*x));
    }
    return separable(g, kind, ha, hb, a, b);
}

ShadowClosure shadow_closure(const Graph& g, ConvexityKind kind, const VertexSet& a, const VertexSet& b) {
    require_inputs(a, b);
    VertexSet ca = hull(g, a, kind), cb = hull(g, b, kind);
    for (;;) {
        if (ca.intersects(cb)) return {false, ca, cb};
        VertexSet na = hull(g, shadow(g, ca, cb, kind), kind);
        VertexSet nb = hull(g, shadow(g, cb, ca, kind), kind);
        if (na == ca && nb == cb) return {true, ca, cb};
        ca = std::move(na);
        cb = std::move(nb);
    }
}

namespace {

SeparationResult monophonic_residue(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& in_a,
                                    const VertexSet& in_b) {
    const VertexSet both = a | b;
    const VertexSet residue = both.complement();
    VertexSet boundary_a = g.empty_set(), next_to_sides = g.empty_set();
    for (Vertex u : a)
        if (g.neighborhood(u).intersects(b)) boundary_a.insert(u);
    for (Vertex x : residue)
        if (g.neighborhood(x).intersects(both)) next_to_sides.insert(x);

    std::map<std::pair<Vertex, Vertex>, VertexSet> mono;
    auto m = [&](Vertex x, Vertex y) -> const VertexSet& {
        auto key = std::minmax(x, y);
        auto it = mono.find(key);
        if (it == mono.end()) it = mono.emplace(key, monophonic_hull(g, VertexSet(g.order(), {x, y}))).first;
        return it->second;
    };

    std::vector<Vertex> vars = residue.to_vector();
    std::vector<std::uint32_t> var_of(g.order(), 0);
    for (std::uint32_t i = 0; i < vars.size(); ++i) var_of[vars[i]] = i;

    TwoSatInstance inst;
    inst.variables = vars.size();
    for (Vertex x : residue) {
        VertexSet sx = g.empty_set();
        for (Vertex u : boundary_a)
            for (Vertex v : g.neighborhood(u) & b) sx |= m(x, u) & m(x, v);
        sx &= next_to_sides;
        if (!is_clique(g, sx)) return not_separable("residue vertex " + std::to_string(x) + " has a non-clique separator");
        for (Vertex x0 : sx)
            if (x0 != x) inst.require_equal(var_of[x], var_of[x0]);
    }
    for (Vertex x0 : next_to_sides)
        for (Vertex y0 : next_to_sides)
            if (x0 < y0 && !g.adjacent(x0, y0)) inst.require_different(var_of[x0], var_of[y0]);

    auto assignment = two_sat_solve(inst);
    if (!assignment) return not_separable("2-SAT instance is unsatisfiable");
    VertexSet h1 = a, h2 = b;
    for (std::uint32_t i = 0; i < vars.size(); ++i) ((*assignment)[i] ? h2 : h1).insert(vars[i]);
    return separable(g, ConvexityKind::monophonic, h1, h2, in_a, in_b);
}

}  // namespace

SeparationResult three_step_separation(const Graph& g, ConvexityKind kind, const VertexSet& a, const VertexSet& b,
                                       std::size_t max_n) {
    require_inputs(a, b);
    if (a.intersects(b)) return not_separable("inputs intersect");
    const auto closed = shadow_closure(g, kind, a, b);
    if (!closed.disjoint) return not_separable("shadow closures intersect");
    const VertexSet& sa = closed.a;
    const VertexSet& sb = closed.b;
    if ((sa | sb).count() == g.order()) return separable(g, kind, sa, sb, a, b);

    std::vector<std::pair<VertexSet, VertexSet>> osculating;
    Distance gap = 0xFFFF;
    Vertex from = 0, to = 0;
    for (Vertex u : sa)
        for (Vertex v : sb)
            if (g.dist(u, v) < gap) {
                gap = g.dist(u, v);
                from = u;
                to = v;
            }
    if (gap == 1) {
        osculating.emplace_back(sa, sb);
    } else {
        std::vector<Vertex> path{from};
        while (path.back() != to)
            for (Vertex nb : g.neighbors(path.back()))
                if (g.dist(nb, to) + 1 == g.dist(path.back(), to)) {
                    path.push_back(nb);
                    break;
                }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            VertexSet pa = extend_hull(g, sa, VertexSet::singleton(g.order(), path[i]), kind);
            VertexSet pb = extend_hull(g, sb, VertexSet::singleton(g.order(), path[i + 1]), kind);
            if (pa.intersects(pb)) continue;
            auto branch = shadow_closure(g, kind, pa, pb);
            if (branch.disjoint) osculating.emplace_back(std::move(branch.a), std::move(branch.b));
        }
        if (osculating.empty()) return not_separable("every branch along the shortest path collapses");
    }

    std::optional<std::vector<HalfspacePair>> census;
    bool beyond_guard = false;
    std::string last_reason = "residue cannot be distributed";
    for (const auto& [oa, ob] : osculating) {
        if ((oa | ob).count() == g.order()) {
            auto r = separable(g, kind, oa, ob, a, b);
            if (r.status == SeparationStatus::separable) return r;
            continue;
        }
        switch (kind) {
        case ConvexityKind::gated: last_reason = "osculating gated pair leaves a residue"; break;
        case ConvexityKind::monophonic: {
            auto r = monophonic_residue(g, oa, ob, a, b);
            if (r.status == SeparationStatus::separable) return r;
            last_reason = r.reason;
            break;
        }
        case ConvexityKind::geodesic: {
            if (g.order() > max_n) {
                beyond_guard = true;
                break;
            }
            if (!census) census = enumerate_halfspaces(g, kind, HalfspaceStrategy::bruteforce, max_n);
            for (const auto& p : *census) {
                if (oa.is_subset_of(p.h1) && ob.is_subset_of(p.h2)) return separable(g, kind, p.h1, p.h2, a, b);
                if (oa.is_subset_of(p.h2) && ob.is_subset_of(p.h1)) return separable(g, kind, p.h2, p.h1, a, b);
            }
            last_reason = "no enumerated halfspace pair separates the closed sets";
            break;
        }
        }
    }
    if (beyond_guard) return unknown("geodesic residue exceeds the enumeration guard");
    return not_separable(last_reason);
}

SeparationResult separate_gated(const Graph& g, const VertexSet& a, const VertexSet& b) {
    return three_step_separation(g, ConvexityKind::gated, a, b);
}

SeparationResult separate_monophonic(const Graph& g, const VertexSet& a, const VertexSet& b) {
    return three_step_separation(g, ConvexityKind::monophonic, a, b);
}

std::optional<std::vector<bool>> two_sat_solve(const TwoSatInstance& inst) {
    const std::size_t nodes = 2 * inst.variables;
    auto node = [](Literal l) { return 2 * std::size_t{l.variable} + (l.positive ? 0 : 1); };
    std::vector<std::vector<std::size_t>> implies(nodes);
    for (const auto& [x, y] : inst.clauses) {
        implies[node(x) ^ 1].push_back(node(y));
        implies[node(y) ^ 1].push_back(node(x));
    }
    // Iterative Tarjan; components come out in reverse topological order.
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(nodes, unvisited), low(nodes, 0), comp(nodes, unvisited);
    std::vector<std::size_t> stack, call;
    std::vector<std::size_t> edge_pos(nodes, 0);
    std::vector<char> on_stack(nodes, 0);
    std::size_t counter = 0, components = 0;
    for (std::size_t root = 0; root < nodes; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back(root);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            const std::size_t v = call.back();
            if (edge_pos[v] < implies[v].size()) {
                const std::size_t w = implies[v][edge_pos[v]++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back(w);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            call.pop_back();
            if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
        }
    }
    std::vector<bool> value(inst.variables);
    for (std::size_t i = 0; i < inst.variables; ++i) {
        if (comp[2 * i] == comp[2 * i + 1]) return std::nullopt;
        value[i] = comp[2 * i] < comp[2 * i + 1];
    }
    return value;
}

}  // namespace gconv
