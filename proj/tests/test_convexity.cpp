#include "gconv/convexity.hpp"
#include "gconv/generators.hpp"
#include "gconv/metric.hpp"
#include "gconv/proximal.hpp"
#include "gconv/separation.hpp"
#include "support/corpus.hpp"
#include "support/expect.hpp"

#include <random>

using namespace gconv;

namespace {

VertexSet random_subset(const Graph& g, std::mt19937_64& rng, double p = 0.3) {
    std::bernoulli_distribution pick(p);
    VertexSet s = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v)
        if (pick(rng)) s.insert(v);
    if (s.empty()) s.insert(static_cast<Vertex>(rng() % g.order()));
    return s;
}

// Random connected set grown from a seed vertex.
VertexSet random_connected_subset(const Graph& g, std::mt19937_64& rng) {
    VertexSet s = VertexSet::singleton(g.order(), static_cast<Vertex>(rng() % g.order()));
    const std::size_t target = 1 + rng() % g.order();
    while (s.count() < target) {
        VertexSet frontier = g.empty_set();
        for (Vertex v : s) frontier |= g.neighborhood(v);
        frontier -= s;
        auto options = frontier.to_vector();
        if (options.empty()) break;
        s.insert(options[rng() % options.size()]);
    }
    return s;
}

VertexSet naive_shadow(const Graph& g, const VertexSet& a, const VertexSet& b) {
    const auto net = corpus::net(g);
    VertexSet out = g.empty_set();
    for (Vertex x = 0; x < g.order(); ++x) {
        auto h = naive::geodesic_hull(net, corpus::mask(b) | naive::Mask{1} << x);
        if (h & corpus::mask(a)) out.insert(x);
    }
    return out;
}

const Graph gamma_graph = gen::gamma();

VertexSet gamma_set(std::initializer_list<Vertex> members) { return VertexSet(gamma_graph.order(), members); }

}  // namespace

TEST_CASE("hull examples") {
    const Graph c5 = gen::cycle(5);
    CHECK(convex_hull(c5, VertexSet(5, {2})) == VertexSet(5, {2}));
    CHECK(convex_hull(c5, VertexSet(5, {0, 2})) == VertexSet(5, {0, 1, 2}));
    CHECK(convex_hull(gen::forbidden(1), VertexSet(5, {1, 2})).count() == 5);
    CHECK(error_of([&] { (void)convex_hull(c5, c5.empty_set()); }) == ErrorCode::empty_input);
    CHECK_FALSE(is_convex(gen::cycle(6), VertexSet(6, {0, 1, 2, 3})));
    const Graph h3 = gen::hypercube(3);
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = 0; v < 8; ++v) CHECK(is_convex(h3, h3.interval(u, v)));
}

TEST_CASE("hulls match the naive closure and are closure operators") {
    std::mt19937_64 rng(31);
    for (const auto& g : corpus::random_graphs(60, 2, 14, 32)) {
        const auto net = corpus::net(g);
        for (int round = 0; round < 8; ++round) {
            const VertexSet s = random_subset(g, rng);
            const VertexSet h = convex_hull(g, s);
            CHECK(corpus::mask(h) == naive::geodesic_hull(net, corpus::mask(s)));
            CHECK(convex_hull(g, h) == h);
            CHECK(is_convex(g, h));
            CHECK(is_convex(g, s) == naive::convex(net, corpus::mask(s)));
            CHECK(is_convex(g, s) == (h == s));
            VertexSet more = s | random_subset(g, rng);
            CHECK(h.is_subset_of(convex_hull(g, more)));
            CHECK(extend_hull(g, h, more, ConvexityKind::geodesic) == convex_hull(g, more));
        }
    }
}

TEST_CASE("hulls on large graphs stay closed") {
    const Graph big = gen::king_grid(12, 12);
    std::mt19937_64 rng(33);
    for (int round = 0; round < 20; ++round) {
        const VertexSet s = random_subset(big, rng, 0.02);
        const VertexSet h = convex_hull(big, s);
        CHECK(s.is_subset_of(h));
        CHECK(is_convex(big, h));
    }
}

TEST_CASE("connected locally convex sets of meshed graphs are convex") {
    std::vector<Graph> meshed{gen::triangular_grid(2), gen::king_grid(4, 4), gen::hyperoctahedron(4),
                              gen::icosahedron(), gen::gamma()};
    for (const auto& g : corpus::random_graphs(60, 4, 12, 34))
        if (is_meshed(g).holds) meshed.push_back(g);
    std::mt19937_64 rng(35);
    for (const auto& g : meshed) {
        CHECK(is_meshed(g).holds);
        for (int round = 0; round < 40; ++round) {
            const VertexSet s = random_connected_subset(g, rng);
            if (is_locally_convex(g, s)) CHECK(is_convex(g, s));
        }
    }
}

TEST_CASE("locally convex but not convex outside meshed graphs") {
    // The 5-cycle minus one vertex is a path with no distance-2 shortcut leaving it.
    const Graph c6 = gen::cycle(6);
    const VertexSet arc(6, {0, 1, 2, 3});
    CHECK(is_locally_convex(c6, arc));
    CHECK_FALSE(is_convex(c6, arc));
}

TEST_CASE("shadow examples") {
    const Graph tree = gen::random_tree(12, 36);
    for (auto [u, v] : tree.edges()) {
        auto w = w_partition(tree, u, v);
        CHECK(shadow(tree, VertexSet::singleton(12, u), VertexSet::singleton(12, v)) == w.closer_to_u);
    }
    const Graph h3 = gen::hypercube(3);
    CHECK(shadow(h3, VertexSet(8, {1}), VertexSet(8, {0})) == VertexSet(8, {1, 3, 5, 7}));

    using namespace gen;
    const VertexSet k = gamma_set({gamma_y, gamma_z});
    const VertexSet u = union_shadow(gamma_graph, gamma_x0, k);
    CHECK(u.contains(gamma_u));
    CHECK(u.contains(gamma_v));
    CHECK_FALSE(u.contains(gamma_w));
    CHECK_FALSE(is_convex(gamma_graph, u));
    CHECK(error_of([&] { (void)shadow(h3, h3.empty_set(), VertexSet(8, {1})); }) == ErrorCode::empty_input);
}

TEST_CASE("shadows match the definition") {
    std::mt19937_64 rng(37);
    for (const auto& g : corpus::random_graphs(40, 2, 11, 38)) {
        for (int round = 0; round < 6; ++round) {
            const VertexSet a = random_subset(g, rng), b = random_subset(g, rng);
            CHECK(shadow(g, a, b) == naive_shadow(g, a, b));
            const auto x0 = static_cast<Vertex>(rng() % g.order());
            VertexSet pieces = g.empty_set();
            for (Vertex p : a) pieces |= vertex_shadow(g, VertexSet::singleton(g.order(), p), x0);
            CHECK(vertex_shadow(g, a, x0) == pieces);
            CHECK(vertex_shadow(g, a, x0) == shadow(g, a, VertexSet::singleton(g.order(), x0)));
        }
    }
}

TEST_CASE("shadows stay inside every separating halfspace") {
    std::mt19937_64 rng(39);
    for (const auto& g : corpus::random_graphs(40, 2, 12, 40)) {
        const auto pairs = enumerate_halfspaces(g, ConvexityKind::geodesic, HalfspaceStrategy::bruteforce);
        for (const auto& p : pairs)
            for (int round = 0; round < 4; ++round) {
                VertexSet a = random_subset(g, rng) & p.h1, b = random_subset(g, rng) & p.h2;
                if (a.empty() || b.empty()) continue;
                CHECK(shadow(g, a, b).is_subset_of(p.h1));
                CHECK(shadow(g, b, a).is_subset_of(p.h2));
            }
    }
}

TEST_CASE("imprints") {
    const Graph c5 = gen::cycle(5);
    CHECK(imprint(c5, 0, VertexSet(5, {0})) == VertexSet(5, {0}));
    CHECK(imprint(c5, 0, VertexSet(5, {1, 2, 3})) == VertexSet(5, {1, 3}));
    const Graph o3 = gen::hyperoctahedron(3);
    for (const auto& pc : pointed_maximal_cliques(o3)) {
        const VertexSet a = convex_hull(o3, pc.k | VertexSet(6, {static_cast<Vertex>(pc.x0 ^ 1u)}));
        if (a.contains(pc.x0)) continue;
        const VertexSet imp = imprint(o3, pc.x0, a);
        CHECK(imp == (o3.neighborhood(pc.x0) & a));
        CHECK(is_clique(o3, imp));
    }
}

TEST_CASE("imprint and shadow properties") {
    std::mt19937_64 rng(41);
    for (const auto& g : corpus::random_graphs(60, 2, 11, 42)) {
        bool intervals_convex = true;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) intervals_convex = intervals_convex && is_convex(g, g.interval(u, v));
        for (int round = 0; round < 6; ++round) {
            const auto x0 = static_cast<Vertex>(rng() % g.order());
            VertexSet a = random_subset(g, rng);
            a.erase(x0);
            if (a.empty()) continue;
            const VertexSet imp = imprint(g, x0, a);
            const VertexSet a_shadow = vertex_shadow(g, a, x0);
            CHECK(a.is_subset_of(vertex_shadow(g, imp, x0)));
            // Needs conv(x0,x) = [x0,x]; fails on graphs with non-convex intervals.
            if (intervals_convex) CHECK(imp == imprint(g, x0, a_shadow));
            CHECK(imprint(g, x0, imp) == imp);
            VertexSet b = random_subset(g, rng) & a_shadow;
            b.erase(x0);
            if (!b.empty()) CHECK(vertex_shadow(g, b, x0).is_subset_of(a_shadow));
            VertexSet smaller = a & random_subset(g, rng, 0.6);
            if (!smaller.empty() && smaller != a) CHECK(proximal_leq(g, x0, smaller, a));
        }
    }
}

TEST_CASE("imprints are metric projections when triangles are equilateral") {
    std::mt19937_64 rng(43);
    std::vector<Graph> graphs{gen::hyperoctahedron(3), gen::king_grid(3, 4), gen::gamma(), gen::icosahedron()};
    for (const auto& g : corpus::random_graphs(60, 3, 10, 44))
        if (is_meshed(g).holds) graphs.push_back(g);
    for (const auto& g : graphs) {
        for (int round = 0; round < 10; ++round) {
            const VertexSet a = convex_hull(g, random_subset(g, rng, 0.2));
            for (Vertex v = 0; v < g.order(); ++v) {
                if (a.contains(v)) continue;
                Distance nearest = 0xFFFF;
                for (Vertex z : a) nearest = std::min(nearest, g.dist(v, z));
                VertexSet projection = g.empty_set();
                for (Vertex z : a)
                    if (g.dist(v, z) == nearest) projection.insert(z);
                CHECK(imprint(g, v, a) == projection);
            }
        }
    }
}

TEST_CASE("W partitions") {
    const Graph h3 = gen::hypercube(3);
    for (auto [u, v] : h3.edges()) CHECK(w_partition(h3, u, v).equidistant.empty());
    auto k3 = w_partition(gen::complete(3), 0, 1);
    CHECK(k3.equidistant == VertexSet(3, {2}));
    CHECK(k3.closer_to_u == VertexSet(3, {0}));
    using namespace gen;
    CHECK(w_partition(gamma_graph, gamma_x0, gamma_y).equidistant.contains(gamma_w));
    for (const auto& g : corpus::random_graphs(20, 2, 12, 45))
        for (auto [u, v] : g.edges()) {
            auto w = w_partition(g, u, v);
            CHECK((w.closer_to_u | w.closer_to_v | w.equidistant) == g.all());
            CHECK_FALSE(w.closer_to_u.intersects(w.closer_to_v));
            CHECK_FALSE(w.closer_to_u.intersects(w.equidistant));
            for (Vertex x : w.closer_to_u) CHECK(g.dist(u, x) < g.dist(v, x));
        }
}

TEST_CASE("extended shadows") {
    const Graph k5 = gen::complete(5);
    CHECK(extended_shadow(k5, 2, VertexSet(5, {0, 1, 3, 4})) == VertexSet(5, {2}));
    const Graph h3 = gen::hypercube(3);
    CHECK(extended_shadow(h3, 0, VertexSet(8, {1})) == VertexSet(8, {0, 2, 4, 6}));
    using namespace gen;
    const VertexSet k = gamma_set({gamma_y, gamma_z});
    const VertexSet ext = extended_shadow(gamma_graph, gamma_x0, k);
    CHECK(ext == vertex_shadow(gamma_graph, k, gamma_x0).complement());
    CHECK(ext.contains(gamma_w));
    CHECK(error_of([&] { (void)extended_shadow(h3, 0, VertexSet(8, {1, 2})); }) ==
          ErrorCode::not_pointed_maximal_clique);
}

TEST_CASE("clique shadows partition the vertex set") {
    for (const auto& g : corpus::random_graphs(80, 2, 11, 46)) {
        bool intervals_convex = true;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) intervals_convex = intervals_convex && is_convex(g, g.interval(u, v));
        for (const auto& pc : pointed_maximal_cliques(g)) {
            const auto split = clique_split(g, pc.x0, pc.k);
            CHECK((split.toward_k | split.toward_x0) == g.all());
            CHECK_FALSE(split.toward_k.intersects(split.toward_x0));
            CHECK(split.toward_k.is_subset_of(vertex_shadow(g, pc.k, pc.x0)));
            if (!intervals_convex) continue;
            CHECK(split.toward_k == vertex_shadow(g, pc.k, pc.x0));
            const VertexSet ks = vertex_shadow(g, pc.k, pc.x0);
            const VertexSet eq = equidistant_set(g, pc.k | VertexSet::singleton(g.order(), pc.x0));
            const VertexSet us = union_shadow(g, pc.x0, pc.k);
            CHECK_FALSE(ks.intersects(eq));
            CHECK_FALSE(ks.intersects(us));
            CHECK_FALSE(eq.intersects(us));
            CHECK((ks | eq | us) == g.all());
            CHECK(extended_shadow(g, pc.x0, pc.k) == ks.complement());
        }
    }
}

TEST_CASE("join is the union of pairwise intervals") {
    const Graph c6 = gen::cycle(6);
    CHECK(join(c6, VertexSet(6, {0}), VertexSet(6, {3})) == c6.all());
    CHECK(join(c6, VertexSet(6, {0}), VertexSet(6, {1, 2})) == VertexSet(6, {0, 1, 2}));
}

TEST_CASE("Peano, Pasch and sandglass") {
    const Graph h3 = gen::hypercube(3);
    CHECK(check_peano(h3).holds);
    CHECK(check_pasch(h3).holds);
    CHECK(check_sandglass(h3).holds);
    auto gamma = check_peano(gamma_graph);
    CHECK_FALSE(gamma.holds);
    CHECK(gamma.tuple.size() == 5);
    CHECK(check_peano(gen::forbidden(3)).holds);
}

TEST_CASE("Peano witnesses replay") {
    for (const auto& g : corpus::random_graphs(40, 3, 8, 47)) {
        auto w = check_peano(g);
        if (w.holds) continue;
        // (u, v, w, x, y): x in [w,v], y in [u,x], and no z in [u,v] has y in [w,z].
        const Vertex u = w.tuple[0], v = w.tuple[1], c = w.tuple[2], x = w.tuple[3], y = w.tuple[4];
        CHECK(g.interval(c, v).contains(x));
        CHECK(g.interval(u, x).contains(y));
        for (Vertex z : g.interval(u, v)) CHECK_FALSE(g.interval(c, z).contains(y));
    }
}
