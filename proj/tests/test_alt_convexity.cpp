#include "gconv/convexity.hpp"
#include "gconv/generators.hpp"
#include "gconv/metric.hpp"
#include "gconv/oracles.hpp"
#include "support/corpus.hpp"
#include "support/expect.hpp"

#include <algorithm>
#include <random>

using namespace gconv;

namespace {

VertexSet random_subset(const Graph& g, std::mt19937_64& rng, double p) {
    std::bernoulli_distribution pick(p);
    VertexSet s = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v)
        if (pick(rng)) s.insert(v);
    if (s.empty()) s.insert(static_cast<Vertex>(rng() % g.order()));
    return s;
}

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

}  // namespace

TEST_CASE("monophonic hull examples") {
    const Graph k5 = gen::complete(5);
    CHECK(monophonic_hull(k5, VertexSet(5, {1, 3})) == VertexSet(5, {1, 3}));
    const Graph c5 = gen::cycle(5);
    CHECK(monophonic_hull(c5, VertexSet(5, {0, 2})) == c5.all());
    CHECK_FALSE(is_monophonic_convex(c5, VertexSet(5, {0, 1, 2})));
    CHECK(is_monophonic_convex(c5, VertexSet(5, {0, 1})));
    std::mt19937_64 rng(51);
    const Graph tree = gen::random_tree(14, 52);
    for (int round = 0; round < 30; ++round) {
        const VertexSet s = random_subset(tree, rng, 0.2);
        CHECK(monophonic_hull(tree, s) == convex_hull(tree, s));
    }
    CHECK(error_of([&] { (void)monophonic_hull(c5, c5.empty_set()); }) == ErrorCode::empty_input);
}

TEST_CASE("gates") {
    const Graph tree = gen::random_tree(12, 53);
    const VertexSet h(12, {0});
    for (Vertex x = 0; x < 12; ++x) CHECK(gate(tree, x, h) == 0u);
    const Graph c5 = gen::cycle(5);
    CHECK_FALSE(gate(c5, 3, VertexSet(5, {0, 1})));
    CHECK(gate(c5, 3, VertexSet(5, {1})) == 1u);
    std::mt19937_64 rng(54);
    for (int round = 0; round < 40; ++round) {
        const VertexSet sub = convex_hull(tree, random_subset(tree, rng, 0.15));
        for (Vertex x = 0; x < 12; ++x) CHECK(gate(tree, x, sub));
    }
}

TEST_CASE("gated hull examples") {
    const Graph h3 = gen::hypercube(3);
    std::mt19937_64 rng(55);
    for (int round = 0; round < 30; ++round) {
        const VertexSet s = random_subset(h3, rng, 0.25);
        CHECK(gated_hull(h3, s) == convex_hull(h3, s));
    }
    CHECK(gated_hull(gen::complete(3), VertexSet(3, {0, 1})).count() == 3);
    CHECK(gated_hull(gen::cycle(5), VertexSet(5, {0, 1})).count() == 5);
    CHECK_FALSE(is_gated(gen::complete(4), VertexSet(4, {0, 1})));
    CHECK_FALSE(is_delta_closed(gen::complete(4), VertexSet(4, {0, 1})));
    CHECK(is_gated(gen::petersen(), VertexSet(10, {7})));
}

TEST_CASE("hulls of every kind against the naive minimum convex superset") {
    std::mt19937_64 rng(56);
    for (const auto& g : corpus::random_graphs(30, 2, 9, 57)) {
        const auto net = corpus::net(g);
        for (int round = 0; round < 5; ++round) {
            const VertexSet s = random_subset(g, rng, 0.3);
            for (auto kind : {ConvexityKind::geodesic, ConvexityKind::monophonic, ConvexityKind::gated}) {
                const VertexSet h = hull(g, s, kind);
                CHECK(corpus::mask(h) == naive::hull(net, corpus::mask(s), corpus::kind(kind)));
                CHECK(is_convex(g, h, kind));
                CHECK(convex_hull(g, s).is_subset_of(h));
            }
        }
    }
}

TEST_CASE("convexity predicates match the naive oracle") {
    for (const auto& g : corpus::random_graphs(30, 2, 9, 58)) {
        const auto net = corpus::net(g);
        for (naive::Mask m = 1; m <= net.full(); ++m) {
            const VertexSet s = corpus::set(g, m);
            CHECK(is_monophonic_convex(g, s) == naive::monophonic_convex(net, m));
            CHECK(is_gated(g, s) == naive::gated(net, m));
        }
    }
}

TEST_CASE("gated sets are monophonically convex, which are geodesically convex") {
    for (const auto& g : corpus::random_graphs(30, 2, 10, 59)) {
        const auto geo = enumerate_convex_sets(g, ConvexityKind::geodesic);
        const auto mono = enumerate_convex_sets(g, ConvexityKind::monophonic);
        const auto gated = enumerate_convex_sets(g, ConvexityKind::gated);
        for (const auto& s : gated) CHECK(std::binary_search(mono.begin(), mono.end(), s));
        for (const auto& s : mono) CHECK(std::binary_search(geo.begin(), geo.end(), s));
    }
}

TEST_CASE("connected delta-closed sets of meshed graphs are gated") {
    std::vector<Graph> meshed{gen::triangular_grid(2), gen::king_grid(4, 4), gen::icosahedron(), gen::gamma(),
                              gen::hyperoctahedron(4)};
    for (const auto& g : corpus::random_graphs(60, 4, 12, 60))
        if (is_meshed(g).holds) meshed.push_back(g);
    std::mt19937_64 rng(61);
    for (const auto& g : meshed)
        for (int round = 0; round < 60; ++round) {
            const VertexSet s = random_connected_subset(g, rng);
            CHECK(is_delta_closed(g, s) == is_gated(g, s));
        }
}
