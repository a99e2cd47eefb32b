#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oddspec/graph.hpp"

namespace oddspec {

// graph6: printable-ASCII encoding of simple undirected graphs (bytes 63..126,
// 6 bits per byte). The vertex count comes first, then the upper adjacency
// triangle column by column, zero-padded to a multiple of 6 bits.
// parse_graph6 throws parse_error (with byte offset) on malformed input.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph per line; blank lines and an optional ">>graph6<<" header are
// tolerated. Returns (1-based line number, bare graph6 token) pairs.
std::vector<std::pair<int, std::string>> read_graph6_lines(const std::string& text);

}  // namespace oddspec
