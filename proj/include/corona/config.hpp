#pragma once

#include <cstdint>

namespace corona {

/// Capacity caps and field choice for the ground-truth computations.
struct OracleConfig {
    std::int64_t characteristic = 0;  // 0 = exact rationals, otherwise a prime
    int max_oracle_vertices = 20;     // Hochster / homology cap
    int max_sdepth_vertices = 10;     // interval-partition search cap
    int max_mis_vertices = 63;        // branch-and-bound cap
    int workers = 0;                  // 0 = hardware concurrency
};

}  // namespace corona
