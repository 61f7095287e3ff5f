#pragma once

#include "sddlab/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sddlab {

using Edge = std::pair<int, int>;

// Simple undirected graph: symmetric irreflexive adjacency, cached
// degrees. Immutable after construction, so instances can be shared
// freely across worker threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Builds from an explicit edge list. Rejects loops, duplicates and
    // out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    int degree(int u) const { return deg_[static_cast<size_t>(u)]; }
    const std::vector<int>& degrees() const { return deg_; }

    std::vector<int> neighbors(int u) const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_; // n_ rows of words_ 64-bit blocks
    std::vector<int> deg_;

    friend Graph without_edge(const Graph& g, int u, int v);
    friend Graph relabeled(const Graph& g, const std::vector<int>& position_of);
};

struct DegreeExtremes {
    int delta;  // minimum degree
    int Delta;  // maximum degree
};

// BFS reachability from vertex 0; vacuously true for n <= 1.
bool is_connected(const Graph& g);

DegreeExtremes degree_extremes(const Graph& g);

// Number of independent cycles, m - n + 1. Meaningful for connected
// graphs only.
int cyclomatic_number(const Graph& g);

// Common degree if the graph is regular, absent otherwise.
std::optional<int> is_regular(const Graph& g);

// (Delta, delta) with Delta > delta when the graph is bipartite and every
// edge joins a maximum-degree vertex to a minimum-degree vertex. Regular
// graphs return absent: the regular and biregular predicates are kept
// disjoint, and callers that need the paper-style union take the
// disjunction themselves.
std::optional<std::pair<int, int>> is_biregular(const Graph& g);

bool is_bipartite(const Graph& g);

// Shape predicates used by equality characterizations.
bool is_path(const Graph& g);     // includes K_1 and K_2
bool is_cycle(const Graph& g);
bool is_star(const Graph& g);     // K_{1,n-1}, n >= 2; includes K_2
bool is_complete(const Graph& g);

// Edges (u0, v0) with d_u0 <= d_u for all u in N(u0) \ {v0} and
// d_v0 <= d_u for all u in N(v0) \ {u0}, lexicographically sorted.
std::vector<Edge> minimal_edges(const Graph& g);

// Copy with one edge removed. The edge must exist.
Graph without_edge(const Graph& g, int u, int v);

// Copy with vertices rearranged: position_of[v] is the new label of v.
Graph relabeled(const Graph& g, const std::vector<int>& position_of);

enum class GraphFamily {
    path,               // P_n, n >= 1
    cycle,              // C_n, n >= 3
    star,               // S_n = K_{1,n-1}, n >= 2
    complete,           // K_n, n >= 1
    c3_star,            // triangle with one pendant vertex
    p4_star,            // P_4 with a pendant on a degree-2 vertex
    complete_bipartite, // K_{a,b}, a,b >= 1
};

// Canonical constructions of the named families; parameters capped at 64.
Graph named_graph(GraphFamily family, int a = 0, int b = 0);

// Parses names like "P4", "C5", "S4", "K4", "K2_3", "C3_star", "P4_star".
std::optional<Graph> graph_from_name(const std::string& name);

} // namespace sddlab
