#include "gconv/graph.hpp"

#include "gconv/error.hpp"
#include "gconv/simd/kernels.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace gconv {
namespace {

constexpr std::size_t max_order = 4096;

// Level-synchronous BFS from `source` over bitset frontiers.
void bfs_row(std::size_t n, const std::vector<VertexSet>& nbhd, Vertex source, Distance* row) {
    constexpr Distance unreached = 0xFFFF;
    std::fill(row, row + n, unreached);
    VertexSet seen(n), frontier(n);
    seen.insert(source);
    frontier.insert(source);
    row[source] = 0;
    for (Distance level = 1; !frontier.empty(); ++level) {
        VertexSet next(n);
        for (Vertex v : frontier) next |= nbhd[v];
        next -= seen;
        for (Vertex v : next) row[v] = level;
        seen |= next;
        frontier = std::move(next);
    }
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw Error(ErrorCode::empty_graph, "graph has no vertices");
    if (n > max_order) throw Error(ErrorCode::too_large, "at most 4096 vertices are supported");
    Graph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw Error(ErrorCode::invalid_vertex,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw Error(ErrorCode::loop_edge, "loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    std::vector<std::vector<Vertex>> lists(n);
    for (auto [u, v] : g.edges_) {
        lists[u].push_back(v);
        lists[v].push_back(u);
    }
    g.offsets_.assign(n + 1, 0);
    g.neighborhoods_.assign(n, VertexSet(n));
    for (Vertex v = 0; v < n; ++v) {
        std::sort(lists[v].begin(), lists[v].end());
        g.offsets_[v + 1] = g.offsets_[v] + lists[v].size();
        g.adjacency_.insert(g.adjacency_.end(), lists[v].begin(), lists[v].end());
        for (Vertex w : lists[v]) g.neighborhoods_[v].insert(w);
    }

    g.dist_.resize(n * n);
    for (Vertex s = 0; s < n; ++s) {
        Distance* row = g.dist_.data() + std::size_t{s} * n;
        bfs_row(n, g.neighborhoods_, s, row);
        for (std::size_t t = 0; t < n; ++t) {
            if (row[t] == 0xFFFF)
                throw Error(ErrorCode::disconnected,
                            "no path between " + std::to_string(s) + " and " + std::to_string(t));
            g.diameter_ = std::max(g.diameter_, row[t]);
        }
    }

    constexpr std::size_t cached_interval_limit = 256;
    if (n <= cached_interval_limit) {
        g.intervals_.assign(n * n, VertexSet(n));
        const auto& k = simd::kernels();
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u; v < n; ++v) {
                auto& iv = g.intervals_[std::size_t{u} * n + v];
                k.sum_equals_mask(g.dist_row(u).data(), g.dist_row(v).data(), g.dist(u, v), n,
                                  iv.words().data());
                g.intervals_[std::size_t{v} * n + u] = iv;
            }
    }
    return g;
}

VertexSet Graph::interval(Vertex u, Vertex v) const {
    VertexSet out(n_);
    interval_into(u, v, out);
    return out;
}

void Graph::interval_into(Vertex u, Vertex v, VertexSet& out) const {
    if (!intervals_.empty()) {
        const auto& cached = intervals_[std::size_t{u} * n_ + v];
        std::copy(cached.words().begin(), cached.words().end(), out.words().begin());
        return;
    }
    simd::kernels().sum_equals_mask(dist_row(u).data(), dist_row(v).data(), dist(u, v), n_,
                                    out.words().data());
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<std::int64_t> local(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> sub;
    for (auto [u, v] : edges_)
        if (local[u] >= 0 && local[v] >= 0)
            sub.emplace_back(static_cast<Vertex>(local[u]), static_cast<Vertex>(local[v]));
    return build(vertices.size(), sub);
}

namespace {

// Next non-empty, comment-stripped line; false at end of input.
bool next_record(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_record(in, line, line_no)) parse_fail(line_no, "missing header \"n m\"");
    long long n = -1, m = -1;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
            parse_fail(line_no, "expected header \"n m\"");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_record(in, line, line_no))
            parse_fail(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream rec(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(rec >> u >> v) || (rec >> extra) || u < 0 || v < 0)
            parse_fail(line_no, "expected edge \"u v\"");
        if (u >= n || v >= n) parse_fail(line_no, "vertex id out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_record(in, line, line_no)) parse_fail(line_no, "unexpected content after edges");
    return Graph::build(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace gconv
