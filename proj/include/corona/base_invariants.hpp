#pragma once

#include <string>
#include <vector>

#include "corona/config.hpp"
#include "corona/graph.hpp"

namespace corona {

/// The invariant tuple of an inner graph H that the closed-form corona
/// formulas consume. depth_h/reg_h/dim_h/sdepth_h_lower describe the quotient
/// ring of H', the induced subgraph on the non-isolated vertices; isolated
/// vertices are carried separately in the iso_count term.
struct BaseInvariants {
    int depth_h = 0;         // t
    int sdepth_h_lower = 0;  // valid lower bound for sdepth
    int reg_h = 0;           // r
    int dim_h = 0;           // independence number of H'
    int iso_count = 0;       // |i(H)|
    int vertex_count = 0;    // |V(H)|
    bool is_null = false;
    bool is_complete = false;
    bool sdepth_exact = false;  // sdepth_h_lower is the exact value
    std::vector<std::string> sources;  // per-component resolution notes

    bool operator==(const BaseInvariants& other) const = default;
};

/// Closed forms for recognized families (paths, cycles, complete, stars,
/// complete bipartite, and disjoint unions of those plus isolated vertices);
/// ground-truth oracles otherwise. Throws NeedsOracleError when a component
/// is unrecognized and oracle_allowed is false, CapacityError past the caps,
/// std::invalid_argument for an empty H.
BaseInvariants base_invariants(const Graph& h, bool oracle_allowed = true,
                               const OracleConfig& config = {});

}  // namespace corona
