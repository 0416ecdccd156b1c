#pragma once

#include <vector>

#include "corona/graph.hpp"

namespace corona {

struct IndependentSetResult {
    int size = 0;
    std::vector<int> witness;  // an independent set attaining the maximum
};

struct InducedMatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> witness;  // edges of a maximum induced matching
};

/// Exact maximum independent set via branch and bound (highest-degree
/// branching, greedy clique-cover bound). Throws CapacityError above
/// max_vertices.
IndependentSetResult independence_number(const Graph& g, int max_vertices = 63);

/// Exact induced matching number, computed as the independence number of the
/// edge conflict graph (edges conflict when adjacent or joined by an edge).
InducedMatchingResult induced_matching_number(const Graph& g, int max_vertices = 63);

/// Maximum-cardinality search followed by perfect-elimination-order
/// verification; deterministic tie-breaking by vertex index.
bool is_chordal(const Graph& g);

/// Partition of V(G) into maximal connected vertex sets, each sorted, ordered
/// by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace corona
