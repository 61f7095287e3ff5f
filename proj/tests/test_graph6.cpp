#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sddlab/enumerate.hpp"
#include "sddlab/graph.hpp"
#include "sddlab/graph6.hpp"

#include <random>
#include <sstream>

using namespace sddlab;

namespace {

// Second packer, written independently of the production encoder: builds
// the whole bit string as characters first, then chunks it.
std::string reference_encode(const Graph& g) {
    const int n = g.order();
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(63 + n));
    for (size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (size_t b = 0; b < 6; ++b) value = value * 2 + (bits[k + b] == '1');
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

Graph random_graph(std::mt19937& rng, int max_order) {
    std::uniform_int_distribution<int> order_dist(0, max_order);
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

TEST_CASE("known encodings") {
    CHECK(graph6_encode(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(graph6_encode(named_graph(GraphFamily::path, 3)) == "Bg");
    CHECK(graph6_encode(named_graph(GraphFamily::complete, 3)) == "Bw");
    CHECK(graph6_decode("A_") == Graph::from_edges(2, {{0, 1}}));
    CHECK(graph6_decode("Bw") == named_graph(GraphFamily::complete, 3));
}

TEST_CASE("round trip on named graphs") {
    for (const Graph& g : {named_graph(GraphFamily::path, 5),
                           named_graph(GraphFamily::cycle, 6),
                           named_graph(GraphFamily::star, 7),
                           named_graph(GraphFamily::complete, 5),
                           named_graph(GraphFamily::c3_star),
                           named_graph(GraphFamily::p4_star)}) {
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("round trip over 10000 random graphs up to n=20") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
        const Graph g = random_graph(rng, 20);
        const std::string line = graph6_encode(g);
        CHECK(graph6_decode(line) == g);
        CHECK(graph6_encode(graph6_decode(line)) == line);
    }
}

TEST_CASE("encoder agrees with the independent packer") {
    for (const Graph& g : connected_graphs(5))
        CHECK(graph6_encode(g) == reference_encode(g));
    std::mt19937 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        const Graph g = random_graph(rng, 30);
        CHECK(graph6_encode(g) == reference_encode(g));
    }
}

TEST_CASE("malformed lines are rejected") {
    auto code_of = [](const std::string& line) {
        try {
            graph6_decode(line);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::BadParameter;
    };
    CHECK(code_of("") == Errc::MalformedGraph6);
    try {
        graph6_encode(Graph(63));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
    CHECK(code_of("D") == Errc::MalformedGraph6);        // truncated
    CHECK(code_of("A_X") == Errc::MalformedGraph6);      // too long
    CHECK(code_of("~??") == Errc::MalformedGraph6);      // multi-byte header
    CHECK(code_of(std::string(1, 20)) == Errc::MalformedGraph6);
    CHECK(code_of("B\x01") == Errc::MalformedGraph6);    // data byte below 63
    // n=2 has one data bit; any of the five padding bits set is invalid
    CHECK(code_of("A" + std::string(1, 63 + 1)) == Errc::MalformedGraph6);
}

TEST_CASE("stream reader skips blanks and headers") {
    std::istringstream in(">>graph6<<A_\n\nBw\n");
    const auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].order() == 2);
    CHECK(graphs[1].size() == 3);
}

TEST_CASE("edge list round trip") {
    const Graph g = named_graph(GraphFamily::complete_bipartite, 2, 3);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);

    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), Error);
}
