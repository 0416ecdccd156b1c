#pragma once

#include <cstdint>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

/// An abstract simplicial complex on ground set {0..ground_size-1}, faces
/// stored as bitmasks. The empty face is always present; the face set is
/// closed under subsets.
struct SimplicialComplex {
    int ground_size = 0;
    std::vector<std::uint32_t> faces;  // sorted ascending as integers; contains 0

    /// Builds the downward closure of the given faces.
    static SimplicialComplex from_facets(int ground_size, const std::vector<std::uint32_t>& facets);

    static SimplicialComplex full_simplex(int ground_size);

    std::size_t face_count() const { return faces.size(); }
    int dimension() const;  // -1 for the complex {empty}
    bool contains(std::uint32_t face) const;

    /// Invariant check: closed under subsets and the empty face present.
    bool is_closed() const;
};

/// The independence complex of g: faces are exactly the independent sets.
/// Throws CapacityError when |V(g)| exceeds max_vertices.
SimplicialComplex independence_complex(const Graph& g, int max_vertices = 20);

/// Ranks of the reduced simplicial homology of k over a field of the given
/// characteristic (0 or a prime). ranks[d+1] = dim H~_d for d = -1..dim(k).
/// Characteristic-0 ranks come from fraction-free integer elimination.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& k,
                                              std::int64_t characteristic);

namespace detail {

/// Core homology routine over faces grouped by cardinality (groups[c] holds
/// the cardinality-c faces, each group sorted ascending; groups[0] = {0}).
std::vector<long long> homology_from_groups(const std::vector<std::vector<std::uint32_t>>& groups,
                                            std::int64_t characteristic);

/// All independent sets of the graph with the given adjacency masks, grouped
/// by cardinality.
std::vector<std::vector<std::uint32_t>> independent_set_groups(
    const std::vector<std::uint32_t>& adjacency, int n);

}  // namespace detail

}  // namespace corona
