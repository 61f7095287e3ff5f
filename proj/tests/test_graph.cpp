#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sddlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace sddlab;

namespace {

Graph random_graph(std::mt19937& rng, int max_order = 20) {
    std::uniform_int_distribution<int> order_dist(1, max_order);
    const int n = order_dist(rng);
    std::uniform_real_distribution<double> p_dist(0.0, 1.0);
    const double p = p_dist(rng);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p_dist(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("from_edges builds the expected degrees") {
    const Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.degrees() == std::vector<int>{1, 1});
    CHECK(k2.size() == 1);

    const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.degrees() == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("from_edges rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {0, 1}}), Error);
    try {
        Graph::from_edges(3, {{0, 1}, {0, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DuplicateEdge);
    }
    try {
        Graph::from_edges(3, {{1, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LoopEdge);
    }
    try {
        Graph::from_edges(3, {{0, 3}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::VertexOutOfRange);
    }
    // (1,0) duplicates (0,1) since adjacency is symmetric
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(named_graph(GraphFamily::path, 4)));
    CHECK(is_connected(Graph::from_edges(2, {{0, 1}})));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
    CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("degree extremes") {
    const auto c4 = named_graph(GraphFamily::cycle, 4);
    CHECK(degree_extremes(c4).delta == 2);
    CHECK(degree_extremes(c4).Delta == 2);

    const auto s4 = named_graph(GraphFamily::star, 4);
    CHECK(degree_extremes(s4).delta == 1);
    CHECK(degree_extremes(s4).Delta == 3);

    const auto paw = named_graph(GraphFamily::c3_star);
    CHECK(degree_extremes(paw).delta == 1);
    CHECK(degree_extremes(paw).Delta == 3);

    CHECK_THROWS_AS(degree_extremes(Graph(0)), Error);
}

TEST_CASE("regular and biregular are disjoint predicates") {
    CHECK(is_regular(named_graph(GraphFamily::cycle, 5)) == 2);
    CHECK(is_regular(named_graph(GraphFamily::complete, 4)) == 3);
    CHECK_FALSE(is_regular(named_graph(GraphFamily::path, 4)).has_value());

    CHECK(is_biregular(named_graph(GraphFamily::star, 4)) == std::make_pair(3, 1));
    CHECK(is_biregular(named_graph(GraphFamily::complete_bipartite, 2, 3)) ==
          std::make_pair(3, 2));
    CHECK_FALSE(is_biregular(named_graph(GraphFamily::cycle, 4)).has_value());
    CHECK_FALSE(is_biregular(named_graph(GraphFamily::path, 4)).has_value());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = random_graph(rng, 10);
        if (is_regular(g)) CHECK_FALSE(is_biregular(g).has_value());
    }
}

TEST_CASE("handshake over random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const Graph g = random_graph(rng);
        const auto& deg = g.degrees();
        CHECK(std::accumulate(deg.begin(), deg.end(), 0) == 2 * g.size());
        for (int u = 0; u < g.order(); ++u)
            CHECK(static_cast<int>(g.neighbors(u).size()) == g.degree(u));
    }
}

TEST_CASE("minimal edges match the definition") {
    const auto c5 = named_graph(GraphFamily::cycle, 5);
    CHECK(minimal_edges(c5).size() == 5);

    const auto p4 = named_graph(GraphFamily::path, 4);
    CHECK(minimal_edges(p4) == std::vector<Edge>{{0, 1}, {2, 3}});

    const auto s4 = named_graph(GraphFamily::star, 4);
    CHECK(minimal_edges(s4).empty());

    // definitional recheck on random graphs
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_graph(rng, 9);
        if (g.size() == 0) continue;
        const auto minimal = minimal_edges(g);
        auto qualifies = [&](const Edge& e) {
            for (int u : g.neighbors(e.first))
                if (u != e.second && g.degree(e.first) > g.degree(u)) return false;
            for (int u : g.neighbors(e.second))
                if (u != e.first && g.degree(e.second) > g.degree(u)) return false;
            return true;
        };
        for (const Edge& e : g.edges()) {
            const bool in_result =
                std::find(minimal.begin(), minimal.end(), e) != minimal.end();
            CHECK(in_result == qualifies(e));
        }
    }
}

TEST_CASE("named graphs") {
    const auto s5 = named_graph(GraphFamily::star, 5);
    CHECK(s5.degrees() == std::vector<int>{4, 1, 1, 1, 1});

    CHECK(named_graph(GraphFamily::c3_star).degrees() == std::vector<int>{3, 2, 2, 1});
    CHECK(named_graph(GraphFamily::p4_star).degrees() == std::vector<int>{1, 3, 2, 1, 1});

    CHECK_THROWS_AS(named_graph(GraphFamily::cycle, 2), Error);
    CHECK_THROWS_AS(named_graph(GraphFamily::path, 0), Error);
    CHECK_THROWS_AS(named_graph(GraphFamily::star, 65), Error);
}

TEST_CASE("graph names parse") {
    CHECK(graph_from_name("P4")->order() == 4);
    CHECK(graph_from_name("C5")->size() == 5);
    CHECK(graph_from_name("K4")->size() == 6);
    CHECK(graph_from_name("K2_3")->order() == 5);
    CHECK(graph_from_name("C3_star")->order() == 4);
    CHECK_FALSE(graph_from_name("Q7").has_value());
    CHECK_FALSE(graph_from_name("P").has_value());
}

TEST_CASE("shape predicates") {
    CHECK(is_path(named_graph(GraphFamily::path, 1)));
    CHECK(is_path(named_graph(GraphFamily::path, 2)));
    CHECK(is_path(named_graph(GraphFamily::path, 7)));
    CHECK_FALSE(is_path(named_graph(GraphFamily::star, 4)));
    CHECK(is_cycle(named_graph(GraphFamily::cycle, 3)));
    CHECK_FALSE(is_cycle(named_graph(GraphFamily::path, 3)));
    CHECK(is_star(named_graph(GraphFamily::star, 2)));
    CHECK(is_star(named_graph(GraphFamily::path, 3))); // P_3 = S_3
    CHECK_FALSE(is_star(named_graph(GraphFamily::path, 4)));
    CHECK(is_complete(named_graph(GraphFamily::complete, 5)));
}

TEST_CASE("cyclomatic number") {
    CHECK(cyclomatic_number(named_graph(GraphFamily::cycle, 6)) == 1);
    CHECK(cyclomatic_number(named_graph(GraphFamily::path, 6)) == 0);
    CHECK(cyclomatic_number(named_graph(GraphFamily::complete, 4)) == 3);
}

TEST_CASE("without_edge") {
    const auto c4 = named_graph(GraphFamily::cycle, 4);
    const Graph reduced = without_edge(c4, 0, 1);
    CHECK(reduced.size() == 3);
    CHECK_FALSE(reduced.adjacent(0, 1));
    CHECK(reduced.degree(0) == 1);
    CHECK_THROWS_AS(without_edge(c4, 0, 2), Error);
}
