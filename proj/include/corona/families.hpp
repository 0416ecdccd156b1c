#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

/// One of the five spine families the closed forms cover.
struct SpineFamily {
    enum class Kind { Path, Cycle, Complete, Star, CompleteBipartite };
    Kind kind = Kind::Path;
    int a = 0;  // n for Path/Cycle/Complete, k for Star, u for CompleteBipartite
    int b = 0;  // v for CompleteBipartite

    int vertex_count() const;
    std::string name() const;  // "path(3)", "kbip(2,3)", ...

    bool operator==(const SpineFamily& other) const = default;
};

/// A covered spine: one family per connected component (a disjoint union of
/// covered families).
using Spine = std::vector<SpineFamily>;

/// Structural match of one connected graph against the named families.
/// Aliases resolve deterministically: trivial -> path(1), K_2/P_2 -> complete(2),
/// C_3 -> complete(3), stars before general complete bipartite graphs.
std::optional<SpineFamily> detect_family(const Graph& connected_graph);

/// Matches every component of x against the families; nullopt when any
/// component is outside them (or x is empty).
std::optional<Spine> recognize_spine(const Graph& x);

/// Center + leaves shape (covers P_2, P_3 and every star): star quotients
/// have Stanley depth exactly 1, with no search needed.
bool is_star_shaped(const Graph& connected_graph);

}  // namespace corona
