#pragma once

#include "propunit/core.hpp"
#include "propunit/orders.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace propunit {

struct ParseError : std::runtime_error {
  int line;  // 1-based; 0 when the error concerns the file as a whole
  ParseError(int line_, const std::string& msg);
};

// One interval per line: "<vertex-id> <left> <right>", rationals as "p" or
// "p/q"; '#' starts a comment; blank lines ignored; ids must cover 0..n-1.
Representation parse_representation(std::istream& in);
std::string format_representation(const Representation& rep);

enum class GraphFormat { edges, graph6 };

// edges: "<n>" header line, then "<u> <v>" lines (duplicates ignored).
// graph6: one graph per line, short form (n <= 62).
std::vector<Graph> parse_graphs(std::istream& in, GraphFormat fmt);
Graph parse_graph6(const std::string& s, int line_no = 1);

// "<n>" header line, then "<x> <y>" or "<x> < <y>" lines meaning x < y.
// The transitive closure is taken; a cycle raises ParseError naming it.
Poset parse_poset(std::istream& in);

// Standalone SVG: one horizontal bar per interval, row = vertex id,
// exact rational scaling rendered as fixed decimals.
std::string render_svg(const Representation& rep);

// Write-temp-then-rename in the target's directory.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace propunit
