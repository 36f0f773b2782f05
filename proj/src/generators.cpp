#include "gconv/generators.hpp"

#include "gconv/error.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace gconv::gen {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::bad_params, what); }

std::size_t checked_product(std::size_t a, std::size_t b) {
    if (b != 0 && a > 4096 / b) bad("graph would exceed 4096 vertices");
    return a * b;
}

Graph from_predicate(std::size_t n, const std::function<bool(Vertex, Vertex)>& adjacent) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

}  // namespace

Graph path(std::size_t n) {
    if (n == 0) bad("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) bad("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::build(n, edges);
}

Graph complete(std::size_t n) {
    if (n == 0) bad("complete needs n >= 1");
    return from_predicate(n, [](Vertex, Vertex) { return true; });
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
    if (parts.empty() || std::find(parts.begin(), parts.end(), 0) != parts.end())
        bad("complete_multipartite needs non-empty parts");
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
    if (part_of.size() > 4096) bad("graph would exceed 4096 vertices");
    if (parts.size() == 1 && parts[0] > 1) bad("a single part of size > 1 is disconnected");
    return from_predicate(part_of.size(), [&](Vertex u, Vertex v) { return part_of[u] != part_of[v]; });
}

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::build(leaves + 1, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) bad("random_tree needs n >= 1");
    if (n <= 2) return path(n);
    std::mt19937_64 rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(rng() % n);
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    std::vector<Edge> edges;
    for (Vertex c : code) {
        Vertex leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return Graph::build(n, edges);
}

Graph hypercube(std::size_t d) {
    if (d > 12) bad("hypercube dimension must be <= 12");
    return from_predicate(std::size_t{1} << d, [](Vertex u, Vertex v) { return std::popcount(u ^ v) == 1; });
}

Graph hamming(std::span<const std::size_t> radices) {
    if (radices.empty()) bad("hamming needs at least one coordinate");
    std::size_t n = 1;
    for (std::size_t r : radices) {
        if (r == 0) bad("hamming radices must be positive");
        n = checked_product(n, r);
    }
    auto digits = [&](Vertex v) {
        std::vector<std::size_t> out;
        for (std::size_t r : radices) {
            out.push_back(v % r);
            v /= static_cast<Vertex>(r);
        }
        return out;
    };
    return from_predicate(n, [&](Vertex u, Vertex v) {
        auto a = digits(u), b = digits(v);
        std::size_t diff = 0;
        for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
        return diff == 1;
    });
}

Graph hyperoctahedron(std::size_t d) {
    if (d < 2 || d > 2048) bad("hyperoctahedron needs 2 <= d <= 2048");
    return from_predicate(2 * d, [](Vertex u, Vertex v) { return (u ^ 1U) != v; });
}

Graph johnson(std::size_t n, std::size_t k) {
    if (k == 0 || k >= n || n > 24) bad("johnson needs 0 < k < n <= 24");
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == k) {
            subsets.push_back(mask);
            if (subsets.size() > 4096) bad("graph would exceed 4096 vertices");
        }
    return from_predicate(subsets.size(), [&](Vertex u, Vertex v) {
        return std::popcount(subsets[u] ^ subsets[v]) == 2;
    });
}

Graph half_cube(std::size_t d) {
    if (d < 2 || d > 13) bad("half_cube needs 2 <= d <= 13");
    std::vector<std::uint32_t> even;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask)
        if (std::popcount(mask) % 2 == 0) even.push_back(mask);
    return from_predicate(even.size(), [&](Vertex u, Vertex v) { return std::popcount(even[u] ^ even[v]) == 2; });
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::build(10, edges);
}

Graph icosahedron() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
        const Vertex low = 6 + i, low_next = 6 + (i + 1) % 5;
        edges.emplace_back(0, up);
        edges.emplace_back(up, up_next);
        edges.emplace_back(up, low);
        edges.emplace_back(up, low_next);
        edges.emplace_back(low, low_next);
        edges.emplace_back(low, 11);
    }
    return Graph::build(12, edges);
}

Graph dodecahedron() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, 5 + 2 * i);
        edges.emplace_back(15 + i, 15 + (i + 1) % 5);
        edges.emplace_back(15 + i, 6 + 2 * i);
    }
    for (Vertex j = 0; j < 10; ++j) edges.emplace_back(5 + j, 5 + (j + 1) % 10);
    return Graph::build(20, edges);
}

Graph triangular_grid(std::size_t radius) {
    if (radius > 36) bad("triangular_grid radius must be <= 36");
    const auto r = static_cast<long>(radius);
    std::vector<std::pair<long, long>> cells;
    for (long q = -r; q <= r; ++q)
        for (long s = -r; s <= r; ++s)
            if (std::abs(q + s) <= r) cells.emplace_back(q, s);
    return from_predicate(cells.size(), [&](Vertex u, Vertex v) {
        const long dq = cells[v].first - cells[u].first, ds = cells[v].second - cells[u].second;
        return (std::abs(dq) + std::abs(ds) + std::abs(dq + ds)) == 2;
    });
}

Graph king_grid(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) bad("king_grid needs positive dimensions");
    const std::size_t n = checked_product(width, height);
    return from_predicate(n, [&](Vertex u, Vertex v) {
        const long du = std::labs(static_cast<long>(u / width) - static_cast<long>(v / width));
        const long dc = std::labs(static_cast<long>(u % width) - static_cast<long>(v % width));
        return std::max(du, dc) == 1;
    });
}

Graph basis_graph_graphic(const Graph& h, std::size_t max_trees) {
    const auto host_edges = h.edges();
    const std::size_t m = host_edges.size();
    if (m > 64) bad("basis_graph_graphic supports at most 64 host edges");
    const std::size_t need = h.order() - 1;
    std::vector<std::uint64_t> trees;

    // Branch per edge: contract (take it) or delete (skip it).
    std::function<void(std::size_t, std::vector<Vertex>, std::uint64_t, std::size_t)> branch =
        [&](std::size_t i, std::vector<Vertex> comp, std::uint64_t chosen, std::size_t taken) {
            if (taken == need) {
                trees.push_back(chosen);
                if (trees.size() > max_trees) bad("spanning-tree count exceeds the guard");
                return;
            }
            if (i == m || m - i < need - taken) return;
            auto [u, v] = host_edges[i];
            if (comp[u] != comp[v]) {
                std::vector<Vertex> merged = comp;
                const Vertex from = comp[v], to = comp[u];
                for (auto& c : merged)
                    if (c == from) c = to;
                branch(i + 1, std::move(merged), chosen | (std::uint64_t{1} << i), taken + 1);
            }
            branch(i + 1, std::move(comp), chosen, taken);
        };
    std::vector<Vertex> comp(h.order());
    std::iota(comp.begin(), comp.end(), 0);
    branch(0, comp, 0, 0);
    std::sort(trees.begin(), trees.end());
    return from_predicate(trees.size(), [&](Vertex a, Vertex b) { return std::popcount(trees[a] ^ trees[b]) == 2; });
}

Graph gamma() {
    enum : Vertex { w, u, v, s, t, x0, y, z };
    const std::vector<Edge> edges{{w, u}, {w, v}, {w, s}, {w, t}, {u, t}, {s, u}, {s, v}, {s, y}, {s, x0},
                                  {u, y}, {t, y}, {t, z}, {v, z}, {y, z}, {x0, u}, {x0, v}, {x0, y}, {x0, z}};
    return Graph::build(8, edges);
}

Graph forbidden(int index) {
    enum : Vertex { a, b, c, d, e, f };
    std::vector<Edge> edges{{a, b}, {a, c}, {b, d}, {b, e}, {c, d}, {c, e}};
    switch (index) {
    case 1: return Graph::build(5, edges);
    case 2: edges.emplace_back(d, e); return Graph::build(5, edges);
    case 3: edges.emplace_back(b, c); return Graph::build(5, edges);
    case 4:
    case 5:
        edges.insert(edges.end(), {{b, c}, {d, e}, {d, f}, {e, f}, {b, f}});
        if (index == 5) edges.emplace_back(a, d);
        return Graph::build(6, edges);
    default: bad("forbidden index must be in 1..5");
    }
}

SeparationProbe forbidden_probe(int index) {
    switch (index) {
    case 1:
    case 3: return {1, {2}};
    case 2: return {3, {4}};
    case 4: return {4, {1, 3, 5}};
    case 5: return {1, {2, 3, 4}};
    default: bad("forbidden index must be in 1..5");
    }
}

Graph twin_apex(const Graph& h) {
    const std::size_t n = h.order();
    std::vector<Edge> edges(h.edges().begin(), h.edges().end());
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>(n));
        edges.emplace_back(v, static_cast<Vertex>(n + 1));
    }
    return Graph::build(n + 2, edges);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    const std::size_t nb = b.order();
    const std::size_t n = checked_product(a.order(), nb);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a.order(); ++i)
        for (auto [p, q] : b.edges()) edges.emplace_back(i * nb + p, i * nb + q);
    for (auto [p, q] : a.edges())
        for (Vertex j = 0; j < nb; ++j) edges.emplace_back(p * nb + j, q * nb + j);
    return Graph::build(n, edges);
}

namespace {

std::size_t as_size(long long v, const char* what) {
    if (v < 0) bad(std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
}

void expect_count(std::string_view family, std::span<const long long> params, std::size_t count) {
    if (params.size() != count)
        bad(std::string(family) + " expects " + std::to_string(count) + " parameter(s)");
}

}  // namespace

Graph by_name(std::string_view raw, std::span<const long long> params) {
    std::string family(raw);
    std::replace(family.begin(), family.end(), '-', '_');
    auto one = [&](const char* what) {
        expect_count(family, params, 1);
        return as_size(params[0], what);
    };
    auto list = [&]() {
        if (params.empty()) bad(family + " expects at least one parameter");
        std::vector<std::size_t> out;
        for (long long p : params) out.push_back(as_size(p, "parameter"));
        return out;
    };
    if (family == "path") return path(one("n"));
    if (family == "cycle") return cycle(one("n"));
    if (family == "complete") return complete(one("n"));
    if (family == "complete_multipartite") return complete_multipartite(list());
    if (family == "star") return star(one("leaves"));
    if (family == "random_tree") {
        expect_count(family, params, 2);
        return random_tree(as_size(params[0], "n"), static_cast<std::uint64_t>(params[1]));
    }
    if (family == "hypercube") return hypercube(one("d"));
    if (family == "hamming") return hamming(list());
    if (family == "hyperoctahedron") return hyperoctahedron(one("d"));
    if (family == "johnson") {
        expect_count(family, params, 2);
        return johnson(as_size(params[0], "n"), as_size(params[1], "k"));
    }
    if (family == "half_cube") return half_cube(one("d"));
    if (family == "triangular_grid") return triangular_grid(one("r"));
    if (family == "king_grid") {
        expect_count(family, params, 2);
        return king_grid(as_size(params[0], "w"), as_size(params[1], "h"));
    }
    if (family == "forbidden") return forbidden(static_cast<int>(one("i")));
    if (family == "basis_graph_graphic") bad("basis_graph_graphic takes a base graph, not numeric parameters");
    expect_count(family, params, 0);
    if (family == "petersen") return petersen();
    if (family == "icosahedron") return icosahedron();
    if (family == "dodecahedron") return dodecahedron();
    if (family == "gamma") return gamma();
    bad("unknown family '" + std::string(raw) + "'");
}

std::vector<std::string> family_names() {
    return {"path", "cycle", "complete", "complete_multipartite", "star", "random_tree", "hypercube",
            "hamming", "hyperoctahedron", "johnson", "half_cube", "petersen", "icosahedron",
            "dodecahedron", "triangular_grid", "king_grid", "basis_graph_graphic", "gamma", "forbidden"};
}

}  // namespace gconv::gen
