#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "corona/config.hpp"
#include "corona/graph.hpp"
#include "corona/homology.hpp"

namespace corona {

/// A partition of the face poset of an independence complex into intervals
/// [C, D] = {F : C subset F subset D}; the data behind a Stanley
/// decomposition of S/I(G).
struct IntervalPartition {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> intervals;  // (bottom, top) masks

    /// Smallest |D| over the intervals; the Stanley depth this witness certifies.
    int min_top_size() const;
};

/// True when the intervals exactly partition the face set of k and every
/// bound is a face with C subset of D.
bool is_valid_interval_partition(const SimplicialComplex& k, const IntervalPartition& partition);

struct SdepthResult {
    int value = 0;
    IntervalPartition witness;
};

/// Exact Stanley depth of S/I(G): the largest t admitting an interval
/// partition of the independence complex face poset with every top of size at
/// least t. Depth-first search over faces ordered by (cardinality, lex),
/// answer found by binary search over t. Throws CapacityError above
/// max_sdepth_vertices.
SdepthResult sdepth_oracle(const Graph& g, const OracleConfig& config = {});

}  // namespace corona
