#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "corona/config.hpp"
#include "corona/graph.hpp"

#include "json.hpp"

namespace corona {

/// Graded Betti numbers of S/I(G): entries[(i, j)] = beta_{i,j}, nonzero
/// entries only. beta_{0,0} = 1 always; entries vanish for j < i and
/// j > n_vars.
struct BettiTable {
    int n_vars = 0;
    std::map<std::pair<int, int>, long long> entries;

    int pdim() const;   // max i with a nonzero entry
    int reg() const;    // max j - i over nonzero entries
    int depth() const;  // n_vars - pdim (Auslander-Buchsbaum)

    /// {"n": n, "entries": [[i, j, beta], ...]} sorted by (i, j).
    nlohmann::json to_json() const;
    static BettiTable from_json(const nlohmann::json& j);

    bool operator==(const BettiTable& other) const = default;
};

std::tuple<int, int, int> pdim_reg_depth(const BettiTable& table);

/// Full Betti table of S/I(G) via Hochster's formula: beta_{i,j} sums the
/// reduced homology ranks H~_{j-i-1} of the induced independence complexes
/// over all vertex subsets of size j. Deterministic for any worker count.
BettiTable betti_table(const Graph& g, const OracleConfig& config = {});

}  // namespace corona
