#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

/// Symbolic description of a graph build: a tree of family constructors,
/// disjoint unions, corona/bristle products and explicit edge lists.
struct GraphSpec {
    enum class Kind {
        Path,               // a = r >= 0
        Cycle,              // a = r >= 3
        Complete,           // a = r >= 1
        Star,               // a = k >= 1
        CompleteBipartite,  // a = u >= 1, b = v >= 1
        Null,               // a = r >= 0
        Union,              // children = parts
        Corona,             // children = {X, H}
        Bristle,            // children = {X}, a = t >= 1
        Explicit,           // a = n, edges 0-based
    };

    Kind kind = Kind::Null;
    int a = 0;
    int b = 0;
    std::vector<GraphSpec> children;
    std::vector<std::pair<int, int>> explicit_edges;

    static GraphSpec path(int r) { return {Kind::Path, r, 0, {}, {}}; }
    static GraphSpec cycle(int r) { return {Kind::Cycle, r, 0, {}, {}}; }
    static GraphSpec complete(int r) { return {Kind::Complete, r, 0, {}, {}}; }
    static GraphSpec star(int k) { return {Kind::Star, k, 0, {}, {}}; }
    static GraphSpec kbip(int u, int v) { return {Kind::CompleteBipartite, u, v, {}, {}}; }
    static GraphSpec null(int r) { return {Kind::Null, r, 0, {}, {}}; }
    static GraphSpec union_of(std::vector<GraphSpec> parts) {
        return {Kind::Union, 0, 0, std::move(parts), {}};
    }
    static GraphSpec corona_of(GraphSpec x, GraphSpec h) {
        return {Kind::Corona, 0, 0, {std::move(x), std::move(h)}, {}};
    }
    static GraphSpec bristle_of(GraphSpec x, int t) {
        return {Kind::Bristle, t, 0, {std::move(x)}, {}};
    }
    static GraphSpec explicit_graph(int n, std::vector<std::pair<int, int>> edges) {
        return {Kind::Explicit, n, 0, {}, std::move(edges)};
    }

    /// Throws std::invalid_argument naming the violated range.
    void validate() const;

    /// Validates, then constructs the graph with the conventional labeling.
    Graph build() const;

    /// Canonical lower-case DSL text, e.g. "corona(path(3),null(2))".
    std::string to_string() const;

    bool operator==(const GraphSpec& other) const = default;
};

}  // namespace corona
