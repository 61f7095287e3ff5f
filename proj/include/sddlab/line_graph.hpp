#pragma once

#include "sddlab/graph.hpp"

#include <utility>
#include <vector>

namespace sddlab {

// Line graph of G together with the map from its vertices back to the
// G-edges they stand for. Vertices follow the lexicographic order of the
// underlying edges, which keeps all derived output deterministic.
struct LineGraphResult {
    Graph lg;
    std::vector<Edge> edge_index; // lg vertex -> G edge
};

// Vertices of L(G) are the edges of G; two are adjacent when the edges
// share an endpoint. Requires at least one edge. Construction verifies
// |V(L)| = m, |E(L)| = M1/2 - m and the per-vertex degree identity
// d_L(uv) = d_u + d_v - 2.
LineGraphResult line_graph(const Graph& g);

// (max{2*delta-2, 1}, 2*Delta-2): the window that must contain every
// degree of L(G). Requires a connected graph with >= 2 edges.
std::pair<int, int> line_degree_bounds(const Graph& g);

// Regularity transfer: predicted = G regular or biregular, actual = L(G)
// regular. The two agree for every connected nontrivial graph.
std::pair<bool, bool> line_is_regular_iff(const Graph& g);

enum class LineShape { star, cycle, path };

// Which graphs have a line graph of the given named shape. The table is
// exactly what exhaustive search certifies: S_2 -> {P_3}, S_3 -> {P_4},
// S_n (n>=4) -> {}, C_3 -> {C_3, S_4}, C_n (n>=4) -> {C_n},
// P_n -> {P_{n+1}}.
std::vector<Graph> preimage_lookup(LineShape shape, int n);

} // namespace sddlab
