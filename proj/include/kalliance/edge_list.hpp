#pragma once

#include <iosfwd>
#include <string>

#include "kalliance/graph.hpp"

namespace kalliance {

// Edge-list text format:
//   # comment lines start with '#'
//   <vertex count>
//   u v          one edge per line, 0-based ids
// Self-loops and repeated edges are rejected with the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace kalliance
