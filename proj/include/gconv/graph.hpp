#pragma once

#include "gconv/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace gconv {

using Edge = std::pair<Vertex, Vertex>;
using Distance = std::uint16_t;

// Immutable connected simple graph with its all-pairs distance matrix.
class Graph {
public:
    // Throws Error{empty_graph | invalid_vertex | loop_edge | disconnected}.
    static Graph build(std::size_t n, std::span<const Edge> edges);

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
    // Sorted, each edge as (u, v) with u < v.
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] const VertexSet& neighborhood(Vertex v) const { return neighborhoods_[v]; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return neighborhoods_[u].contains(v); }

    [[nodiscard]] Distance dist(Vertex u, Vertex v) const { return dist_[std::size_t{u} * n_ + v]; }
    [[nodiscard]] std::span<const Distance> dist_row(Vertex u) const {
        return {dist_.data() + std::size_t{u} * n_, n_};
    }
    [[nodiscard]] Distance diameter() const noexcept { return diameter_; }

    // {w : d(u,w) + d(w,v) = d(u,v)}
    [[nodiscard]] VertexSet interval(Vertex u, Vertex v) const;
    // Same as interval() but reuses `out`'s storage (universe must match).
    void interval_into(Vertex u, Vertex v, VertexSet& out) const;

    [[nodiscard]] VertexSet empty_set() const { return VertexSet(n_); }
    [[nodiscard]] VertexSet all() const { return VertexSet::full(n_); }

    [[nodiscard]] Graph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Graph() = default;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<VertexSet> neighborhoods_;
    std::vector<Distance> dist_;
    Distance diameter_ = 0;
    std::vector<VertexSet> intervals_;
};

// Edge-list text: "n m" then m lines "u v"; '#' starts a comment.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace gconv
