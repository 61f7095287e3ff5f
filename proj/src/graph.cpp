#include "sddlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

namespace sddlab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) fail(Errc::BadParameter, "negative vertex count");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
    deg_.assign(static_cast<size_t>(n_), 0);
}

void Graph::add_edge_unchecked(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    ++deg_[static_cast<size_t>(u)];
    ++deg_[static_cast<size_t>(v)];
    ++m_;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(Errc::VertexOutOfRange, "edge (" + std::to_string(u) + "," +
                                             std::to_string(v) + ") outside 0.." +
                                             std::to_string(n - 1));
        if (u == v)
            fail(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v))
            fail(Errc::DuplicateEdge, "edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") listed twice");
        g.add_edge_unchecked(u, v);
    }
    return g;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> result;
    result.reserve(static_cast<size_t>(deg_[static_cast<size_t>(u)]));
    for (int v = 0; v < n_; ++v)
        if (adjacent(u, v)) result.push_back(v);
    return result;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    result.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) result.emplace_back(u, v);
    return result;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < n; ++v) {
            if (g.adjacent(u, v) && !seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == n;
}

DegreeExtremes degree_extremes(const Graph& g) {
    if (g.order() == 0) fail(Errc::EmptyGraph, "degree extremes of the empty graph");
    const auto& deg = g.degrees();
    auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
    return DegreeExtremes{*lo, *hi};
}

int cyclomatic_number(const Graph& g) {
    return g.size() - g.order() + 1;
}

std::optional<int> is_regular(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    const auto& deg = g.degrees();
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;
    return deg[0];
}

bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<size_t>(start)] != -1) continue;
        color[static_cast<size_t>(start)] = 0;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                    frontier.push(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::pair<int, int>> is_biregular(const Graph& g) {
    if (g.size() == 0) return std::nullopt;
    auto [delta, Delta] = degree_extremes(g);
    if (Delta == delta) return std::nullopt; // regular, kept disjoint
    for (const auto& [u, v] : g.edges()) {
        int a = g.degree(u), b = g.degree(v);
        if (std::minmax(a, b) != std::minmax(delta, Delta)) return std::nullopt;
    }
    if (!is_bipartite(g)) return std::nullopt;
    return std::make_pair(Delta, delta);
}

bool is_path(const Graph& g) {
    if (g.order() == 0) return false;
    if (!is_connected(g) || g.size() != g.order() - 1) return false;
    for (int d : g.degrees())
        if (d > 2) return false;
    return true;
}

bool is_cycle(const Graph& g) {
    if (g.order() < 3 || g.size() != g.order()) return false;
    for (int d : g.degrees())
        if (d != 2) return false;
    return is_connected(g);
}

bool is_star(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != n - 1 || !is_connected(g)) return false;
    return degree_extremes(g).Delta == n - 1;
}

bool is_complete(const Graph& g) {
    const int n = g.order();
    return g.size() == n * (n - 1) / 2;
}

std::vector<Edge> minimal_edges(const Graph& g) {
    if (g.size() == 0) fail(Errc::NoEdges, "minimal edges of an edgeless graph");
    auto end_ok = [&](int endpoint, int other) {
        for (int u : g.neighbors(endpoint))
            if (u != other && g.degree(endpoint) > g.degree(u)) return false;
        return true;
    };
    std::vector<Edge> result;
    for (const auto& [u, v] : g.edges())
        if (end_ok(u, v) && end_ok(v, u)) result.emplace_back(u, v);
    return result;
}

Graph without_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        fail(Errc::VertexOutOfRange, "edge endpoint out of range");
    if (!g.adjacent(u, v)) fail(Errc::BadParameter, "edge not present");
    Graph out = g;
    out.bits_[static_cast<size_t>(u) * out.words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
    out.bits_[static_cast<size_t>(v) * out.words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
    --out.deg_[static_cast<size_t>(u)];
    --out.deg_[static_cast<size_t>(v)];
    --out.m_;
    return out;
}

Graph relabeled(const Graph& g, const std::vector<int>& position_of) {
    const int n = g.order();
    if (static_cast<int>(position_of.size()) != n)
        fail(Errc::BadParameter, "relabeling size mismatch");
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v))
                out.add_edge_unchecked(position_of[static_cast<size_t>(u)],
                                       position_of[static_cast<size_t>(v)]);
    return out;
}

namespace {

constexpr int kMaxNamedOrder = 64;

void require_param(bool ok, const std::string& what) {
    if (!ok) fail(Errc::BadParameter, what);
}

} // namespace

Graph named_graph(GraphFamily family, int a, int b) {
    std::vector<Edge> edges;
    switch (family) {
    case GraphFamily::path:
        require_param(a >= 1 && a <= kMaxNamedOrder, "P_n needs 1 <= n <= 64");
        for (int i = 0; i + 1 < a; ++i) edges.emplace_back(i, i + 1);
        return Graph::from_edges(a, edges);
    case GraphFamily::cycle:
        require_param(a >= 3 && a <= kMaxNamedOrder, "C_n needs 3 <= n <= 64");
        for (int i = 0; i + 1 < a; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(0, a - 1);
        return Graph::from_edges(a, edges);
    case GraphFamily::star:
        require_param(a >= 2 && a <= kMaxNamedOrder, "S_n needs 2 <= n <= 64");
        for (int i = 1; i < a; ++i) edges.emplace_back(0, i);
        return Graph::from_edges(a, edges);
    case GraphFamily::complete:
        require_param(a >= 1 && a <= kMaxNamedOrder, "K_n needs 1 <= n <= 64");
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j) edges.emplace_back(i, j);
        return Graph::from_edges(a, edges);
    case GraphFamily::c3_star:
        return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    case GraphFamily::p4_star:
        // 0-1-2-3 path, pendant 4 on vertex 1
        return Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 4}, {2, 3}});
    case GraphFamily::complete_bipartite:
        require_param(a >= 1 && b >= 1 && a + b <= kMaxNamedOrder,
                      "K_{a,b} needs a,b >= 1 and a+b <= 64");
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
        return Graph::from_edges(a + b, edges);
    }
    fail(Errc::BadParameter, "unknown graph family");
}

std::optional<Graph> graph_from_name(const std::string& name) {
    if (name == "C3_star") return named_graph(GraphFamily::c3_star);
    if (name == "P4_star") return named_graph(GraphFamily::p4_star);
    if (name.size() < 2) return std::nullopt;
    char kind = name[0];
    std::string rest = name.substr(1);
    auto parse_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        try {
            return std::stoi(s);
        } catch (...) {
            return std::nullopt;
        }
    };
    if (kind == 'K') {
        auto sep = rest.find('_');
        if (sep != std::string::npos) {
            auto a = parse_int(rest.substr(0, sep));
            auto b = parse_int(rest.substr(sep + 1));
            if (!a || !b) return std::nullopt;
            return named_graph(GraphFamily::complete_bipartite, *a, *b);
        }
    }
    auto num = parse_int(rest);
    if (!num) return std::nullopt;
    switch (kind) {
    case 'P': return named_graph(GraphFamily::path, *num);
    case 'C': return named_graph(GraphFamily::cycle, *num);
    case 'S': return named_graph(GraphFamily::star, *num);
    case 'K': return named_graph(GraphFamily::complete, *num);
    default: return std::nullopt;
    }
}

} // namespace sddlab
