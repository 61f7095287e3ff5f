#pragma once

#include "sddlab/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sddlab {

// graph6 interchange format, single-byte size header only (n < 63):
// byte 0 is 63+n, then the upper-triangle bits x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed big-endian six per byte, each byte offset by 63,
// zero-padded to a byte boundary.
std::string graph6_encode(const Graph& g);

// Strict decoder: rejects wrong lengths, bytes outside [63,126],
// multi-byte size headers and nonzero padding bits.
Graph graph6_decode(const std::string& line);

// Reads one graph per line; skips blank lines and an optional
// ">>graph6<<" prefix.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Edge-list text format: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace sddlab
