#pragma once

#include "corona/betti.hpp"
#include "corona/combinatorics.hpp"
#include "corona/config.hpp"
#include "corona/graph.hpp"
#include "corona/sdepth.hpp"

namespace corona {

/// Krull dimension of S/I(G): the independence number of G.
int dim_oracle(const Graph& g, const OracleConfig& config = {});

/// Cohen-Macaulayness from first principles: depth (Hochster Betti table,
/// Auslander-Buchsbaum) equals dimension (maximum independent set).
bool is_cm_oracle(const Graph& g, const OracleConfig& config = {});

}  // namespace corona
