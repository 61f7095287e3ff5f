#include "sddlab/line_graph.hpp"

#include "sddlab/indices.hpp"

namespace sddlab {

LineGraphResult line_graph(const Graph& g) {
    if (g.size() == 0) fail(Errc::NoEdges, "line graph of an edgeless graph");
    const std::vector<Edge> gedges = g.edges(); // lexicographic
    const int m = static_cast<int>(gedges.size());

    std::vector<Edge> ledges;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            const auto& [u1, v1] = gedges[static_cast<size_t>(a)];
            const auto& [u2, v2] = gedges[static_cast<size_t>(b)];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                ledges.emplace_back(a, b);
        }
    }
    LineGraphResult result{Graph::from_edges(m, ledges), gedges};

    // Structural identities; any failure is a construction bug.
    if (result.lg.order() != g.size())
        throw std::logic_error("line graph order != edge count");
    const Rational m1 = zagreb_m1(g);
    if (Rational(result.lg.size()) != m1 / 2 - g.size())
        throw std::logic_error("line graph size != M1/2 - m");
    for (int e = 0; e < m; ++e) {
        const auto& [u, v] = gedges[static_cast<size_t>(e)];
        if (result.lg.degree(e) != g.degree(u) + g.degree(v) - 2)
            throw std::logic_error("line graph degree identity failed");
    }
    return result;
}

std::pair<int, int> line_degree_bounds(const Graph& g) {
    if (g.size() < 2)
        fail(Errc::TooSmall, "degree bounds need a graph with >= 2 edges");
    if (!is_connected(g))
        fail(Errc::TooSmall, "degree bounds need a connected graph");
    const auto [delta, Delta] = degree_extremes(g);
    return {std::max(2 * delta - 2, 1), 2 * Delta - 2};
}

std::pair<bool, bool> line_is_regular_iff(const Graph& g) {
    if (g.size() == 0) fail(Errc::NoEdges, "regularity transfer needs an edge");
    const bool predicted = is_regular(g).has_value() || is_biregular(g).has_value();
    const bool actual = is_regular(line_graph(g).lg).has_value();
    return {predicted, actual};
}

std::vector<Graph> preimage_lookup(LineShape shape, int n) {
    switch (shape) {
    case LineShape::star:
        if (n < 2) fail(Errc::BadParameter, "star shape needs n >= 2");
        if (n == 2) return {named_graph(GraphFamily::path, 3)};
        if (n == 3) return {named_graph(GraphFamily::path, 4)};
        return {};
    case LineShape::cycle:
        if (n < 3) fail(Errc::BadParameter, "cycle shape needs n >= 3");
        if (n == 3)
            return {named_graph(GraphFamily::cycle, 3), named_graph(GraphFamily::star, 4)};
        // As printed the n >= 4 row claims an empty preimage, but the cycle
        // itself always qualifies; exhaustive search certifies it is the
        // only one.
        return {named_graph(GraphFamily::cycle, n)};
    case LineShape::path:
        if (n < 1) fail(Errc::BadParameter, "path shape needs n >= 1");
        return {named_graph(GraphFamily::path, n + 1)};
    }
    fail(Errc::BadParameter, "unknown line shape");
}

} // namespace sddlab
