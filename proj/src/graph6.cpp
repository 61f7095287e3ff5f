#include "sddlab/graph6.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace sddlab {

namespace {

constexpr int kBias = 63;
constexpr int kMaxOrder = 62; // single-byte size header

size_t data_bytes(int n) {
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder)
        fail(Errc::TooLarge, "graph6 supports n < 63, got n = " + std::to_string(n));
    std::string out;
    out.reserve(1 + data_bytes(n));
    out.push_back(static_cast<char>(kBias + n));
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kBias + (chunk << (6 - filled))));
    return out;
}

Graph graph6_decode(const std::string& line) {
    if (line.empty()) fail(Errc::MalformedGraph6, "empty line");
    const unsigned char header = static_cast<unsigned char>(line[0]);
    if (header == 126)
        fail(Errc::MalformedGraph6, "multi-byte size header (n >= 63) not supported");
    if (header < kBias || header > 126)
        fail(Errc::MalformedGraph6, "size byte out of range");
    const int n = header - kBias;
    if (line.size() != 1 + data_bytes(n))
        fail(Errc::MalformedGraph6, "wrong length for order " + std::to_string(n));

    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<Edge> edges;
    size_t k = 0;
    int i = 0, j = 1;
    for (size_t byte = 1; byte < line.size(); ++byte) {
        const unsigned char c = static_cast<unsigned char>(line[byte]);
        if (c < kBias || c > 126)
            fail(Errc::MalformedGraph6, "data byte out of range");
        const int value = c - kBias;
        for (int bit = 5; bit >= 0; --bit, ++k) {
            const bool set = (value >> bit) & 1;
            if (k < nbits) {
                if (set) edges.emplace_back(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (set) {
                fail(Errc::MalformedGraph6, "nonzero padding bits");
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        graphs.push_back(graph6_decode(line));
    }
    return graphs;
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) fail(Errc::BadParameter, "edge list: expected header \"n m\"");
    if (n < 0 || m < 0) fail(Errc::BadParameter, "edge list: negative counts");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            fail(Errc::BadParameter, "edge list: expected " + std::to_string(m) + " edges");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace sddlab
