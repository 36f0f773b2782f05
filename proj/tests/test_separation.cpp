#include "gconv/error.hpp"
#include "gconv/generators.hpp"
#include "gconv/metric.hpp"
#include "gconv/separation.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <optional>

using namespace gconv;

namespace {

VertexSet vs(const Graph& g, std::initializer_list<Vertex> members) { return VertexSet(g.order(), members); }

void require_valid(const Graph& g, const SeparationResult& r, const VertexSet& a, const VertexSet& b) {
    REQUIRE(r.pair);
    CHECK(is_halfspace_pair(g, r.pair->h1, r.pair->h2, r.pair->kind));
    CHECK(a.is_subset_of(r.pair->h1));
    CHECK(b.is_subset_of(r.pair->h2));
}

}  // namespace

TEST_CASE("two-sat basics") {
    TwoSatInstance single;
    single.variables = 1;
    single.add_clause({0, true}, {0, true});
    auto a = two_sat_solve(single);
    REQUIRE(a);
    CHECK((*a)[0]);

    TwoSatInstance all_four;
    all_four.variables = 2;
    all_four.add_clause({0, true}, {1, true});
    all_four.add_clause({0, false}, {1, true});
    all_four.add_clause({0, true}, {1, false});
    all_four.add_clause({0, false}, {1, false});
    CHECK_FALSE(two_sat_solve(all_four));

    TwoSatInstance chain;
    chain.variables = 6;
    for (std::uint32_t i = 0; i + 1 < 6; ++i) chain.require_equal(i, i + 1);
    auto c = two_sat_solve(chain);
    REQUIRE(c);
    for (bool v : *c) CHECK(v == (*c)[0]);
}

TEST_CASE("two-sat agrees with exhaustive assignment search") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        TwoSatInstance inst;
        inst.variables = 1 + rng() % 6;
        const std::size_t clauses = rng() % 12;
        for (std::size_t i = 0; i < clauses; ++i)
            inst.add_clause({static_cast<std::uint32_t>(rng() % inst.variables), rng() % 2 == 0},
                            {static_cast<std::uint32_t>(rng() % inst.variables), rng() % 2 == 0});
        auto holds = [&](const std::vector<bool>& val) {
            for (auto [x, y] : inst.clauses)
                if (val[x.variable] != x.positive && val[y.variable] != y.positive) return false;
            return true;
        };
        bool any = false;
        for (unsigned m = 0; m < (1u << inst.variables) && !any; ++m) {
            std::vector<bool> val(inst.variables);
            for (std::size_t i = 0; i < inst.variables; ++i) val[i] = (m >> i) & 1u;
            any = holds(val);
        }
        auto solved = two_sat_solve(inst);
        CHECK(any == solved.has_value());
        if (solved) CHECK(holds(*solved));
    }
}

TEST_CASE("halfspace enumeration examples") {
    CHECK(enumerate_halfspaces(gen::hypercube(3), ConvexityKind::geodesic, HalfspaceStrategy::bipartite).size() == 3);
    for (std::size_t n = 2; n <= 6; ++n)
        CHECK(enumerate_halfspaces(gen::complete(n), ConvexityKind::geodesic, HalfspaceStrategy::bruteforce).size() ==
              (std::size_t{1} << (n - 1)) - 1);
    auto c5 = enumerate_halfspaces(gen::cycle(5), ConvexityKind::geodesic, HalfspaceStrategy::bruteforce);
    CHECK(c5.size() == 5);
    for (const auto& p : c5) {
        const auto small = std::min(p.h1.count(), p.h2.count());
        CHECK(small == 2);
        CHECK(p.h1.contains(0));
    }
}

TEST_CASE("inapplicable strategies throw") {
    CHECK_THROWS_AS((void)enumerate_halfspaces(gen::cycle(5), ConvexityKind::geodesic, HalfspaceStrategy::bipartite),
                    Error);
    CHECK_THROWS_AS((void)enumerate_halfspaces(gen::cycle(4), ConvexityKind::monophonic, HalfspaceStrategy::bipartite),
                    Error);
    CHECK_THROWS_AS((void)enumerate_halfspaces(gen::path(3), ConvexityKind::geodesic, HalfspaceStrategy::gated_edges),
                    Error);
    try {
        (void)enumerate_halfspaces(gen::cycle(5), ConvexityKind::geodesic, HalfspaceStrategy::dismantling);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::strategy_inapplicable);
    }
    try {
        (void)enumerate_halfspaces(gen::hypercube(3), ConvexityKind::geodesic, HalfspaceStrategy::dismantling);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::hereditary_dismantling_failed);
    }
}

TEST_CASE("strategies reproduce the brute-force pair list") {
    auto graphs = corpus::random_graphs(80, 3, 10, 11);
    graphs.push_back(gen::hypercube(3));
    graphs.push_back(gen::hyperoctahedron(3));
    graphs.push_back(gen::gamma());
    for (std::size_t i = 1; i <= 4; ++i) graphs.push_back(gen::king_grid(i + 1, 3));
    for (const auto& g : graphs) {
        const auto brute = enumerate_halfspaces(g, ConvexityKind::geodesic, HalfspaceStrategy::bruteforce);
        if (is_bipartite(g))
            CHECK(enumerate_halfspaces(g, ConvexityKind::geodesic, HalfspaceStrategy::bipartite) == brute);
        if (is_meshed(g).holds) {
            std::optional<std::vector<HalfspacePair>> lifted;
            try {
                lifted = enumerate_halfspaces(g, ConvexityKind::geodesic, HalfspaceStrategy::dismantling);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::hereditary_dismantling_failed);
            }
            if (lifted) CHECK(*lifted == brute);
        }
        CHECK(enumerate_halfspaces(g, ConvexityKind::gated, HalfspaceStrategy::gated_edges) ==
              enumerate_halfspaces(g, ConvexityKind::gated, HalfspaceStrategy::bruteforce));
    }
}

TEST_CASE("brute-force halfspaces match the naive oracle") {
    for (const auto& g : corpus::random_graphs(40, 3, 9, 12))
        for (auto kind : {ConvexityKind::geodesic, ConvexityKind::monophonic, ConvexityKind::gated}) {
            const auto net = corpus::net(g);
            std::vector<naive::Mask> ours;
            for (const auto& p : enumerate_halfspaces(g, kind, HalfspaceStrategy::bruteforce))
                ours.push_back(corpus::mask(p.h1));
            std::sort(ours.begin(), ours.end());
            auto theirs = naive::halfspaces(net, corpus::kind(kind));
            std::sort(theirs.begin(), theirs.end());
            CHECK(ours == theirs);
        }
}

TEST_CASE("greedy separation") {
    const Graph h3 = gen::hypercube(3);
    auto r = greedy_separation(h3, ConvexityKind::geodesic, vs(h3, {0}), vs(h3, {7}));
    CHECK(r.status == SeparationStatus::separable);
    require_valid(h3, r, vs(h3, {0}), vs(h3, {7}));

    const Graph c6 = gen::cycle(6);
    auto bad = greedy_separation(c6, ConvexityKind::geodesic, vs(c6, {0, 2}), vs(c6, {1}));
    CHECK(bad.status == SeparationStatus::not_separable);

    const Graph o3 = gen::hyperoctahedron(3);
    auto semi = greedy_separation(o3, ConvexityKind::geodesic, vs(o3, {0, 2}), vs(o3, {5}));
    CHECK(semi.status == SeparationStatus::separable);
    require_valid(o3, semi, vs(o3, {0, 2}), vs(o3, {5}));
}

TEST_CASE("greedy separation never answers wrongly") {
    for (const auto& g : corpus::random_graphs(60, 3, 9, 13)) {
        const auto net = corpus::net(g);
        for (Vertex x = 0; x < g.order(); ++x)
            for (Vertex y = x + 1; y < g.order(); ++y) {
                const auto a = vs(g, {x}), b = vs(g, {y});
                auto r = greedy_separation(g, ConvexityKind::geodesic, a, b);
                const bool truth = naive::separable(net, naive::Kind::geodesic, corpus::mask(a), corpus::mask(b));
                if (r.status == SeparationStatus::separable) {
                    CHECK(truth);
                    require_valid(g, r, a, b);
                }
                if (r.status == SeparationStatus::not_separable) CHECK_FALSE(truth);
            }
    }
}

TEST_CASE("shadow closure examples") {
    const Graph c6 = gen::cycle(6);
    auto c = shadow_closure(c6, ConvexityKind::geodesic, vs(c6, {0}), vs(c6, {3}));
    CHECK(c.disjoint);
    CHECK(c.a == vs(c6, {0}));
    CHECK(c.b == vs(c6, {3}));

    const Graph k3 = gen::complete(3);
    auto t = shadow_closure(k3, ConvexityKind::geodesic, vs(k3, {0}), vs(k3, {1}));
    CHECK(t.disjoint);
    CHECK(t.a == vs(k3, {0}));
    CHECK(t.b == vs(k3, {1}));

    const Graph h3 = gen::hypercube(3);
    auto halves = shadow_closure(h3, ConvexityKind::geodesic, vs(h3, {0, 2, 4, 6}), vs(h3, {1, 3, 5, 7}));
    CHECK(halves.a == vs(h3, {0, 2, 4, 6}));
    CHECK(halves.b == vs(h3, {1, 3, 5, 7}));
}

TEST_CASE("separating pairs contain the shadow closure") {
    for (const auto& g : corpus::random_graphs(40, 3, 9, 14))
        for (auto kind : {ConvexityKind::geodesic, ConvexityKind::monophonic, ConvexityKind::gated}) {
            const auto pairs = enumerate_halfspaces(g, kind, HalfspaceStrategy::bruteforce);
            for (Vertex x = 0; x < g.order(); ++x)
                for (Vertex y = x + 1; y < g.order(); ++y) {
                    auto c = shadow_closure(g, kind, vs(g, {x}), vs(g, {y}));
                    if (!c.disjoint) continue;
                    CHECK(c.a.contains(x));
                    CHECK(c.b.contains(y));
                    for (const auto& p : pairs) {
                        if (p.h1.contains(x) && p.h2.contains(y)) {
                            CHECK(c.a.is_subset_of(p.h1));
                            CHECK(c.b.is_subset_of(p.h2));
                        }
                        if (p.h2.contains(x) && p.h1.contains(y)) {
                            CHECK(c.a.is_subset_of(p.h2));
                            CHECK(c.b.is_subset_of(p.h1));
                        }
                    }
                }
        }
}

TEST_CASE("three-step examples") {
    // Every vertex pair of C6 at distance two spans the whole cycle by induced paths.
    const Graph c6 = gen::cycle(6);
    CHECK(separate_monophonic(c6, vs(c6, {0}), vs(c6, {3})).status == SeparationStatus::not_separable);
    const Graph c4 = gen::cycle(4);
    auto mono = separate_monophonic(c4, vs(c4, {0, 1}), vs(c4, {2, 3}));
    CHECK(mono.status == SeparationStatus::separable);
    const Graph p4 = gen::path(4);
    auto split = separate_monophonic(p4, vs(p4, {0}), vs(p4, {3}));
    CHECK(split.status == SeparationStatus::separable);
    require_valid(p4, split, vs(p4, {0}), vs(p4, {3}));

    const Graph tree = gen::random_tree(12, 3);
    for (auto [u, v] : tree.edges()) {
        auto w = w_partition(tree, u, v);
        auto r = separate_gated(tree, w.closer_to_u, w.closer_to_v);
        CHECK(r.status == SeparationStatus::separable);
    }
    for (Vertex x = 0; x < tree.order(); ++x)
        for (Vertex y = x + 1; y < tree.order(); ++y)
            CHECK(separate_gated(tree, vs(tree, {x}), vs(tree, {y})).status == SeparationStatus::separable);

    const Graph k3 = gen::complete(3);
    CHECK(separate_gated(k3, vs(k3, {0}), vs(k3, {1})).status == SeparationStatus::not_separable);

    const Graph h3 = gen::hypercube(3);
    auto facets = separate_gated(h3, vs(h3, {0, 2}), vs(h3, {5, 7}));
    CHECK(facets.status == SeparationStatus::separable);
    require_valid(h3, facets, vs(h3, {0, 2}), vs(h3, {5, 7}));

    for (int i = 1; i <= 5; ++i) {
        const Graph f = gen::forbidden(i);
        const auto probe = gen::forbidden_probe(i);
        auto r = three_step_separation(f, ConvexityKind::geodesic, VertexSet::singleton(f.order(), probe.vertex),
                                       VertexSet(f.order(), probe.set));
        CHECK(r.status == SeparationStatus::not_separable);
    }
}

TEST_CASE("exact separators agree with the naive oracle") {
    for (const auto& g : corpus::random_graphs(40, 3, 9, 15)) {
        const auto net = corpus::net(g);
        for (auto kind : {ConvexityKind::geodesic, ConvexityKind::monophonic, ConvexityKind::gated})
            for (Vertex x = 0; x < g.order(); ++x)
                for (Vertex y = x + 1; y < g.order(); ++y) {
                    const auto a = vs(g, {x}), b = vs(g, {y});
                    auto r = three_step_separation(g, kind, a, b);
                    const bool truth = naive::separable(net, corpus::kind(kind), corpus::mask(a), corpus::mask(b));
                    CHECK(r.status != SeparationStatus::unknown);
                    CHECK((r.status == SeparationStatus::separable) == truth);
                    if (r.status == SeparationStatus::separable) require_valid(g, r, a, b);
                }
    }
}
