#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sddlab/enumerate.hpp"
#include "sddlab/indices.hpp"
#include "sddlab/line_graph.hpp"

#include <map>
#include <random>
#include <set>

using namespace sddlab;

namespace {

Graph named(GraphFamily f, int a = 0, int b = 0) { return named_graph(f, a, b); }

} // namespace

TEST_CASE("line graphs of the named fixtures") {
    const auto p4 = line_graph(named(GraphFamily::path, 4));
    CHECK(p4.lg.order() == 3);
    CHECK(p4.lg.size() == 2); // M1(P_4)/2 - m = 5 - 3
    CHECK(is_path(p4.lg));

    const auto s4 = line_graph(named(GraphFamily::star, 4));
    CHECK(is_cycle(s4.lg));
    CHECK(s4.lg.order() == 3);

    for (int n : {3, 5, 8}) {
        const auto cn = line_graph(named(GraphFamily::cycle, n));
        CHECK(is_cycle(cn.lg));
        CHECK(cn.lg.order() == n);
    }

    const auto k2 = line_graph(named(GraphFamily::complete, 2));
    CHECK(k2.lg.order() == 1);
    CHECK(k2.lg.size() == 0);

    CHECK_THROWS_AS(line_graph(Graph(3)), Error);
}

TEST_CASE("edge_index describes adjacency by shared endpoints") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> nd(2, 9);
        const int n = nd(rng);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (pd(rng) < 0.5) edges.emplace_back(u, v);
        if (edges.empty()) continue;
        const Graph g = Graph::from_edges(n, edges);
        const auto result = line_graph(g);
        REQUIRE(result.edge_index.size() == static_cast<size_t>(result.lg.order()));
        for (int a = 0; a < result.lg.order(); ++a) {
            for (int b = a + 1; b < result.lg.order(); ++b) {
                const auto& [u1, v1] = result.edge_index[static_cast<size_t>(a)];
                const auto& [u2, v2] = result.edge_index[static_cast<size_t>(b)];
                const bool shares =
                    u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
                CHECK(result.lg.adjacent(a, b) == shares);
            }
        }
    }
}

TEST_CASE("structural identities over all connected graphs n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            const auto result = line_graph(g);
            CHECK(result.lg.order() == g.size());
            CHECK(Rational(result.lg.size()) == zagreb_m1(g) / 2 - g.size());
            for (int e = 0; e < result.lg.order(); ++e) {
                const auto& [u, v] = result.edge_index[static_cast<size_t>(e)];
                CHECK(result.lg.degree(e) == g.degree(u) + g.degree(v) - 2);
            }
            // size comparison: paths shrink by one, everything else grows
            if (is_path(g))
                CHECK(result.lg.size() == g.size() - 1);
            else
                CHECK(result.lg.size() >= g.size());
        }
    }
}

TEST_CASE("line degree bounds") {
    CHECK(line_degree_bounds(named(GraphFamily::cycle, 5)) == std::make_pair(2, 2));
    CHECK(line_degree_bounds(named(GraphFamily::path, 4)) == std::make_pair(1, 2));
    CHECK(line_degree_bounds(named(GraphFamily::star, 4)) == std::make_pair(1, 4));
    CHECK_THROWS_AS(line_degree_bounds(named(GraphFamily::complete, 2)), Error);

    for (int n = 3; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            if (g.size() < 2) continue;
            const auto [lo, hi] = line_degree_bounds(g);
            const auto lg = line_graph(g).lg;
            const auto [dl, Dl] = degree_extremes(lg);
            CHECK(lo <= dl);
            CHECK(dl <= Dl);
            CHECK(Dl <= hi);
        }
    }
}

TEST_CASE("line regularity biconditional") {
    CHECK(line_is_regular_iff(named(GraphFamily::complete_bipartite, 2, 3)) ==
          std::make_pair(true, true));
    CHECK(line_is_regular_iff(named(GraphFamily::path, 4)) == std::make_pair(false, false));
    CHECK(line_is_regular_iff(named(GraphFamily::cycle, 6)) == std::make_pair(true, true));

    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            const auto [predicted, actual] = line_is_regular_iff(g);
            CHECK(predicted == actual);
        }
    }
}

TEST_CASE("preimage lookup table") {
    auto forms = [](const std::vector<Graph>& graphs) {
        std::set<std::string> out;
        for (const Graph& g : graphs) out.insert(canonical_form(g).bytes);
        return out;
    };
    CHECK(forms(preimage_lookup(LineShape::cycle, 3)) ==
          forms({named(GraphFamily::cycle, 3), named(GraphFamily::star, 4)}));
    CHECK(preimage_lookup(LineShape::star, 5).empty());
    CHECK(forms(preimage_lookup(LineShape::path, 6)) ==
          forms({named(GraphFamily::path, 7)}));
    CHECK(forms(preimage_lookup(LineShape::cycle, 5)) ==
          forms({named(GraphFamily::cycle, 5)}));
    CHECK(forms(preimage_lookup(LineShape::star, 2)) ==
          forms({named(GraphFamily::path, 3)}));
    CHECK(forms(preimage_lookup(LineShape::star, 3)) ==
          forms({named(GraphFamily::path, 4)}));
    CHECK_THROWS_AS(preimage_lookup(LineShape::cycle, 2), Error);
    CHECK_THROWS_AS(preimage_lookup(LineShape::star, 1), Error);
}

TEST_CASE("preimage table certified by exhaustive search to n = 8") {
    // found[(shape, order)] = canonical forms of every G <= 8 vertices
    // whose line graph has that shape
    std::map<std::pair<LineShape, int>, std::set<std::string>> found;
    int max_line_order = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            const Graph lg = line_graph(g).lg;
            max_line_order = std::max(max_line_order, lg.order());
            const std::string form = canonical_form(g).bytes;
            if (lg.order() >= 2 && is_star(lg))
                found[{LineShape::star, lg.order()}].insert(form);
            if (is_cycle(lg)) found[{LineShape::cycle, lg.order()}].insert(form);
            if (is_path(lg)) found[{LineShape::path, lg.order()}].insert(form);
        }
    }
    auto expected = [](LineShape shape, int k) {
        std::set<std::string> out;
        for (const Graph& g : preimage_lookup(shape, k))
            if (g.order() <= 8) out.insert(canonical_form(g).bytes);
        return out;
    };
    for (int k = 2; k <= std::min(max_line_order, 9); ++k)
        CHECK(found[{LineShape::star, k}] == expected(LineShape::star, k));
    for (int k = 3; k <= std::min(max_line_order, 9); ++k)
        CHECK(found[{LineShape::cycle, k}] == expected(LineShape::cycle, k));
    for (int k = 1; k <= std::min(max_line_order, 7); ++k)
        CHECK(found[{LineShape::path, k}] == expected(LineShape::path, k));
}
