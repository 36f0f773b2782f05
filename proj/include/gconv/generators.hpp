#pragma once

#include "gconv/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gconv::gen {

// Labelings are documented per family; every family throws Error{bad_params}
// on invalid arguments.

Graph path(std::size_t n);                     // 0-1-...-(n-1)
Graph cycle(std::size_t n);                    // n >= 3
Graph complete(std::size_t n);
Graph complete_multipartite(std::span<const std::size_t> parts);  // parts get consecutive ids
Graph star(std::size_t leaves);                // centre 0, leaves 1..leaves
Graph random_tree(std::size_t n, std::uint64_t seed);  // uniform via Prüfer code
Graph hypercube(std::size_t d);                // vertex = bit vector
Graph hamming(std::span<const std::size_t> radices);  // mixed-radix, first coordinate fastest
Graph hyperoctahedron(std::size_t d);          // 2d vertices, v and v^1 antipodal
Graph johnson(std::size_t n, std::size_t k);   // k-subsets of n as ascending bitmasks
Graph half_cube(std::size_t d);                // even-weight vectors, ascending
Graph petersen();                              // outer 0..4, spokes i~i+5, inner pentagram
Graph icosahedron();                           // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
Graph dodecahedron();                          // 0..4 outer, 5..14 middle ring, 15..19 inner
Graph triangular_grid(std::size_t radius);     // hex ball in axial coordinates, lex order
Graph king_grid(std::size_t width, std::size_t height);  // id = row * width + col
// Spanning trees of h (ascending edge-index masks), adjacent when they differ in two edges.
Graph basis_graph_graphic(const Graph& h, std::size_t max_trees = 20000);
// w, u, v, s, t, x0, y, z = 0..7
Graph gamma();
// a, b, c, d, e, f = 0..5: a top, b/c middle pair, d/e bottom pair, f lowest.
Graph forbidden(int index);
// h plus two non-adjacent vertices joined to everything in h.
Graph twin_apex(const Graph& h);
Graph cartesian_product(const Graph& a, const Graph& b);  // id = i * b.order() + j

struct SeparationProbe {
    Vertex vertex;
    std::vector<Vertex> set;
};
// The vertex and convex set that no halfspace pair of forbidden(index) separates.
SeparationProbe forbidden_probe(int index);

constexpr Vertex gamma_w = 0, gamma_u = 1, gamma_v = 2, gamma_s = 3, gamma_t = 4, gamma_x0 = 5,
                 gamma_y = 6, gamma_z = 7;

// Family by name with integer parameters, as used by the command line.
Graph by_name(std::string_view family, std::span<const long long> params);
std::vector<std::string> family_names();

}  // namespace gconv::gen
