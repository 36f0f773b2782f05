#include "gconv/convexity.hpp"

#include "gconv/error.hpp"
#include "gconv/simd/kernels.hpp"

#include <vector>

namespace gconv {

std::string_view to_string(ConvexityKind kind) {
    switch (kind) {
    case ConvexityKind::geodesic: return "geodesic";
    case ConvexityKind::monophonic: return "monophonic";
    case ConvexityKind::gated: return "gated";
    }
    return "?";
}

std::optional<ConvexityKind> parse_convexity_kind(std::string_view name) {
    if (name == "geodesic") return ConvexityKind::geodesic;
    if (name == "monophonic") return ConvexityKind::monophonic;
    if (name == "gated") return ConvexityKind::gated;
    return std::nullopt;
}

namespace detail {

// Closes `set` under intervals; pairs inside set∖pending are assumed closed.
void close_geodesic(const Graph& g, VertexSet& set, VertexSet pending) {
    VertexSet iv = g.empty_set();
    while (auto v = pending.first()) {
        pending.erase(*v);
        const VertexSet members = set;
        for (Vertex w : members) {
            if (w == *v || g.adjacent(*v, w)) continue;
            g.interval_into(*v, w, iv);
            iv -= set;
            if (iv.empty()) continue;
            set |= iv;
            pending |= iv;
        }
    }
}

}  // namespace detail

VertexSet convex_hull(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw Error(ErrorCode::empty_input, "hull of the empty set");
    VertexSet out = s;
    detail::close_geodesic(g, out, s);
    return out;
}

bool is_convex(const Graph& g, const VertexSet& s) {
    VertexSet iv = g.empty_set();
    for (Vertex u : s)
        for (Vertex v : s) {
            if (v <= u || g.adjacent(u, v)) continue;
            g.interval_into(u, v, iv);
            if (!iv.is_subset_of(s)) return false;
        }
    return true;
}

bool is_locally_convex(const Graph& g, const VertexSet& s) {
    if (!is_connected_subset(g, s)) return false;
    for (Vertex u : s)
        for (Vertex v : s)
            if (v > u && g.dist(u, v) == 2 && !g.interval(u, v).is_subset_of(s)) return false;
    return true;
}

VertexSet shadow(const Graph& g, const VertexSet& a, const VertexSet& b, ConvexityKind kind) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::empty_input, "shadow of or onto the empty set");
    const VertexSet hb = hull(g, b, kind);
    if (hb.intersects(a)) return g.all();
    VertexSet out = a;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (a.contains(x) || hb.contains(x)) continue;
        if (extend_hull(g, hb, VertexSet::singleton(g.order(), x), kind).intersects(a)) out.insert(x);
    }
    return out;
}

VertexSet vertex_shadow(const Graph& g, const VertexSet& a, Vertex x0) {
    return shadow(g, a, VertexSet::singleton(g.order(), x0));
}

VertexSet union_shadow(const Graph& g, Vertex x0, const VertexSet& k) {
    VertexSet out = g.empty_set();
    const VertexSet pole = VertexSet::singleton(g.order(), x0);
    for (Vertex y : k) out |= shadow(g, pole, VertexSet::singleton(g.order(), y));
    return out;
}

VertexSet equidistant_set(const Graph& g, const VertexSet& k) {
    VertexSet out = g.all();
    auto first = k.first();
    if (!first) return out;
    VertexSet mask = g.empty_set();
    for (Vertex y : k) {
        if (y == *first) continue;
        simd::kernels().equal_mask(g.dist_row(*first).data(), g.dist_row(y).data(), g.order(),
                                   mask.words().data());
        out &= mask;
    }
    return out;
}

bool is_pointed_maximal_clique(const Graph& g, Vertex x0, const VertexSet& k) {
    if (k.empty() || k.contains(x0)) return false;
    VertexSet clique = k;
    clique.insert(x0);
    if (!is_clique(g, clique)) return false;
    VertexSet common = g.all();
    for (Vertex v : clique) common &= g.neighborhood(v);
    return common.empty();
}

VertexSet extended_shadow(const Graph& g, Vertex x0, const VertexSet& k) {
    if (!is_pointed_maximal_clique(g, x0, k))
        throw Error(ErrorCode::not_pointed_maximal_clique, "(x0, K) is not a pointed maximal clique");
    VertexSet clique = k;
    clique.insert(x0);
    return union_shadow(g, x0, k) | equidistant_set(g, clique);
}

CliqueSplit clique_split(const Graph& g, Vertex x0, const VertexSet& k) {
    VertexSet toward = g.empty_set();
    for (Vertex y : k) toward |= w_partition(g, y, x0).closer_to_u;
    VertexSet rest = toward.complement();
    return {std::move(toward), std::move(rest)};
}

VertexSet imprint(const Graph& g, Vertex x0, const VertexSet& a) {
    VertexSet out = g.empty_set();
    VertexSet iv = g.empty_set();
    for (Vertex z : a) {
        g.interval_into(x0, z, iv);
        iv &= a;
        if (iv.count() == 1) out.insert(z);
    }
    return out;
}

WPartition w_partition(const Graph& g, Vertex u, Vertex v) {
    WPartition p{g.empty_set(), g.empty_set(), g.empty_set()};
    const auto& k = simd::kernels();
    const auto du = g.dist_row(u).data();
    const auto dv = g.dist_row(v).data();
    k.less_mask(du, dv, g.order(), p.closer_to_u.words().data());
    k.less_mask(dv, du, g.order(), p.closer_to_v.words().data());
    k.equal_mask(du, dv, g.order(), p.equidistant.words().data());
    return p;
}

VertexSet join(const Graph& g, const VertexSet& a, const VertexSet& b) {
    VertexSet out = g.empty_set();
    VertexSet iv = g.empty_set();
    for (Vertex x : a)
        for (Vertex y : b) {
            g.interval_into(x, y, iv);
            out |= iv;
        }
    return out;
}

namespace {

std::vector<VertexSet> pair_hulls(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> out(n * n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v) {
            out[u * n + v] = convex_hull(g, VertexSet(n, {u, v}));
            out[v * n + u] = out[u * n + v];
        }
    return out;
}

}  // namespace

ConditionWitness check_peano(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    // through[w*n+y] = {z : y ∈ [w,z]}
    std::vector<VertexSet> through(std::size_t{n} * n, g.empty_set());
    for (Vertex w = 0; w < n; ++w)
        for (Vertex y = 0; y < n; ++y)
            for (Vertex z = 0; z < n; ++z)
                if (g.dist(w, y) + g.dist(y, z) == g.dist(w, z)) through[std::size_t{w} * n + y].insert(z);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            const VertexSet uv = g.interval(u, v);
            for (Vertex w = 0; w < n; ++w)
                for (Vertex x : g.interval(w, v))
                    for (Vertex y : g.interval(u, x))
                        if (!uv.intersects(through[std::size_t{w} * n + y]))
                            return {"Peano", false, {u, v, w, x, y}};
        }
    return {"Peano", true, {}};
}

ConditionWitness check_pasch(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    const auto conv = pair_hulls(g);
    auto at = [&](Vertex a, Vertex b) -> const VertexSet& { return conv[std::size_t{a} * n + b]; };
    for (Vertex w = 0; w < n; ++w)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                for (Vertex x : at(w, u))
                    for (Vertex y : at(w, v))
                        if (!at(u, y).intersects(at(v, x))) return {"Pasch", false, {w, u, v, x, y}};
    return {"Pasch", true, {}};
}

ConditionWitness check_sandglass(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    const auto conv = pair_hulls(g);
    auto at = [&](Vertex a, Vertex b) -> const VertexSet& { return conv[std::size_t{a} * n + b]; };
    // reach[x*n+y] = {x' : y ∈ conv(x,x')}
    std::vector<VertexSet> reach(std::size_t{n} * n, g.empty_set());
    for (Vertex x = 0; x < n; ++x)
        for (Vertex xp = 0; xp < n; ++xp)
            for (Vertex y : at(x, xp)) reach[std::size_t{x} * n + y].insert(xp);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex up = 0; up < n; ++up)
            for (Vertex v = 0; v < n; ++v)
                for (Vertex vp = 0; vp < n; ++vp) {
                    const VertexSet ys = at(u, up) & at(v, vp);
                    if (ys.empty()) continue;
                    const VertexSet& target = at(up, vp);
                    for (Vertex x : at(u, v))
                        for (Vertex y : ys)
                            if (!target.intersects(reach[std::size_t{x} * n + y]))
                                return {"sandglass", false, {u, up, v, vp, x, y}};
                }
    return {"sandglass", true, {}};
}

VertexSet evaluate(const Graph& g, const ShadowSpec& spec) {
    switch (spec.kind) {
    case ShadowKind::set: return shadow(g, spec.base, spec.pole);
    case ShadowKind::vertex: return shadow(g, spec.base, spec.pole);
    case ShadowKind::union_of_vertices: return union_shadow(g, *spec.pole.first(), spec.base);
    case ShadowKind::extended: return extended_shadow(g, *spec.pole.first(), spec.base);
    }
    return g.empty_set();
}

}  // namespace gconv
