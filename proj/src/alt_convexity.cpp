#include "gconv/convexity.hpp"

#include "gconv/error.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace gconv {
namespace detail {
void close_geodesic(const Graph& g, VertexSet& set, VertexSet pending);
}

namespace {

// Interior of a shortest path leaving `cur` at some u and re-entering at a
// member non-adjacent to u; empty when no such path exists.
VertexSet find_outside_path(const Graph& g, const VertexSet& cur) {
    const std::size_t n = g.order();
    std::vector<Vertex> parent(n);
    for (Vertex u : cur) {
        VertexSet visited = cur;
        std::deque<Vertex> queue{u};
        while (!queue.empty()) {
            Vertex p = queue.front();
            queue.pop_front();
            for (Vertex nb : g.neighbors(p)) {
                if (cur.contains(nb)) {
                    if (p == u || nb == u || g.adjacent(u, nb)) continue;
                    VertexSet interior = g.empty_set();
                    for (Vertex walk = p; walk != u; walk = parent[walk]) interior.insert(walk);
                    return interior;
                }
                if (visited.contains(nb)) continue;
                visited.insert(nb);
                parent[nb] = p;
                queue.push_back(nb);
            }
        }
    }
    return g.empty_set();
}

void close_monophonic(const Graph& g, VertexSet& cur) {
    for (;;) {
        VertexSet path = find_outside_path(g, cur);
        if (path.empty()) return;
        cur |= path;
        detail::close_geodesic(g, cur, path);
    }
}

void close_gated(const Graph& g, VertexSet& cur) {
    for (bool grew = true; grew;) {
        grew = false;
        for (Vertex x = 0; x < g.order() && !grew; ++x) {
            if (cur.contains(x)) continue;
            const VertexSet imp = imprint(g, x, cur);
            if (imp.count() < 2) continue;
            auto it = imp.begin();
            const Vertex u = *it++;
            const Vertex v = *it;
            Vertex apex = x;
            for (Vertex c : g.interval(x, u) & g.interval(x, v))
                if (g.dist(x, c) > g.dist(x, apex)) apex = c;
            cur.insert(apex);
            detail::close_geodesic(g, cur, VertexSet::singleton(g.order(), apex));
            grew = true;
        }
    }
}

}  // namespace

VertexSet monophonic_hull(const Graph& g, const VertexSet& s) {
    VertexSet out = convex_hull(g, s);
    close_monophonic(g, out);
    return out;
}

VertexSet gated_hull(const Graph& g, const VertexSet& s) {
    VertexSet out = convex_hull(g, s);
    close_gated(g, out);
    return out;
}

VertexSet hull(const Graph& g, const VertexSet& s, ConvexityKind kind) {
    switch (kind) {
    case ConvexityKind::geodesic: return convex_hull(g, s);
    case ConvexityKind::monophonic: return monophonic_hull(g, s);
    case ConvexityKind::gated: return gated_hull(g, s);
    }
    return convex_hull(g, s);
}

VertexSet extend_hull(const Graph& g, const VertexSet& closed, const VertexSet& extra, ConvexityKind kind) {
    VertexSet fresh = extra - closed;
    if (fresh.empty()) return closed;
    VertexSet out = closed | fresh;
    detail::close_geodesic(g, out, fresh);
    if (kind == ConvexityKind::monophonic) close_monophonic(g, out);
    if (kind == ConvexityKind::gated) close_gated(g, out);
    return out;
}

bool is_monophonic_convex(const Graph& g, const VertexSet& s) {
    return is_convex(g, s) && find_outside_path(g, s).empty();
}

std::optional<Vertex> gate(const Graph& g, Vertex x, const VertexSet& h) {
    if (h.empty()) return std::nullopt;
    if (h.contains(x)) return x;
    Distance nearest = 0xFFFF;
    for (Vertex y : h) nearest = std::min(nearest, g.dist(x, y));
    for (Vertex c : h) {
        if (g.dist(x, c) != nearest) continue;
        bool ok = true;
        for (Vertex y : h)
            if (g.dist(x, c) + g.dist(c, y) != g.dist(x, y)) { ok = false; break; }
        if (ok) return c;
    }
    return std::nullopt;
}

bool is_gated(const Graph& g, const VertexSet& s) {
    if (s.empty()) return true;
    for (Vertex x = 0; x < g.order(); ++x)
        if (!s.contains(x) && !gate(g, x, s)) return false;
    return true;
}

bool is_delta_closed(const Graph& g, const VertexSet& s) {
    if (!is_connected_subset(g, s)) return false;
    for (Vertex x = 0; x < g.order(); ++x)
        if (!s.contains(x) && (g.neighborhood(x) & s).count() >= 2) return false;
    return true;
}

bool is_convex(const Graph& g, const VertexSet& s, ConvexityKind kind) {
    switch (kind) {
    case ConvexityKind::geodesic: return is_convex(g, s);
    case ConvexityKind::monophonic: return is_monophonic_convex(g, s);
    case ConvexityKind::gated: return is_gated(g, s);
    }
    return false;
}

}  // namespace gconv
