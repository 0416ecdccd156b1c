#pragma once

#include <string>
#include <vector>

#include "corona/graph_spec.hpp"

namespace corona {

/// Parses the graph DSL: path(4), cycle(5), complete(3), star(4), kbip(2,3),
/// null(2), union(a,b,...), corona(X,H), bristle(X,t),
/// graph(7; 1-2,2-3,2-4,3-5,5-6,5-7). Whitespace-insensitive, keywords
/// case-insensitive. Throws ParseError with position and expected tokens.
GraphSpec parse_spec(const std::string& text);

/// Parses a compare expression: either a single spec or a grid
/// "spine x {h1, h2, ...}" where any integer may be a range "lo..hi"
/// (e.g. "path(1..3) x {null(1..2), path(2..3)}"). Grids expand to
/// corona(spine, h) instances in input order, spine-major.
std::vector<GraphSpec> parse_compare_instances(const std::string& text);

}  // namespace corona
