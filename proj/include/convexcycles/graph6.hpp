#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "convexcycles/graph.hpp"

namespace convexcycles {

// graph6 encoding (McKay). Supports the 1-byte, 4-byte and 8-byte size
// headers and an optional leading ">>graph6<<" marker. Trailing newline and
// carriage return are ignored. Throws ParseError on malformed input.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// True if the line looks like graph6 rather than an edge list.
bool looks_like_graph6(std::string_view line);

// Reads every graph from a text blob: one graph per line for graph6, or the
// whole blob as a single edge list. Blank lines and '#' comments are skipped.
std::vector<Graph> read_graphs(std::string_view text);

}  // namespace convexcycles
