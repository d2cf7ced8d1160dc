#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddgraph/graph.hpp"

namespace ddgraph {

// graph6 string for an undirected graph: the order (one byte n+63 for
// n <= 62, otherwise byte 126 followed by three bytes carrying n in 6-bit
// big-endian groups, each +63; n <= 258047 supported here), followed by the
// upper triangle in column order packed into 6-bit groups, each +63.
std::string graph6_encode(const Graph& g);

// Errors: BadInput on malformed strings.
Graph graph6_decode(const std::string& s);

// One graph per line.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6(std::ostream& out, const Graph& g);
void write_graph6_file(const std::string& path, const Graph& g);

}  // namespace ddgraph
