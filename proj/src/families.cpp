#include "corona/families.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "corona/combinatorics.hpp"

namespace corona {

int SpineFamily::vertex_count() const {
    switch (kind) {
        case Kind::Path:
        case Kind::Cycle:
        case Kind::Complete: return a;
        case Kind::Star: return a + 1;
        case Kind::CompleteBipartite: return a + b;
    }
    throw std::logic_error("SpineFamily: unknown kind");
}

std::string SpineFamily::name() const {
    switch (kind) {
        case Kind::Path: return "path(" + std::to_string(a) + ")";
        case Kind::Cycle: return "cycle(" + std::to_string(a) + ")";
        case Kind::Complete: return "complete(" + std::to_string(a) + ")";
        case Kind::Star: return "star(" + std::to_string(a) + ")";
        case Kind::CompleteBipartite:
            return "kbip(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    throw std::logic_error("SpineFamily: unknown kind");
}

namespace {

// Two-coloring; returns {u, v} class sizes when bipartite.
std::optional<std::pair<int, int>> bipartition_sizes(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    color[0] = 0;
    std::queue<int> queue;
    queue.push(0);
    int sizes[2] = {1, 0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                ++sizes[color[w]];
                queue.push(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    return std::make_pair(sizes[0], sizes[1]);
}

}  // namespace

std::optional<SpineFamily> detect_family(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) return SpineFamily{SpineFamily::Kind::Path, 1, 0};
    if (is_complete(g)) return SpineFamily{SpineFamily::Kind::Complete, n, 0};

    int max_degree = 0, leaves = 0;
    for (int v = 0; v < n; ++v) {
        max_degree = std::max(max_degree, g.degree(v));
        if (g.degree(v) == 1) ++leaves;
    }
    if (max_degree <= 2 && g.edge_count() == n - 1)
        return SpineFamily{SpineFamily::Kind::Path, n, 0};
    if (max_degree == 2 && g.edge_count() == n)
        return SpineFamily{SpineFamily::Kind::Cycle, n, 0};
    if (max_degree == n - 1 && leaves == n - 1)
        return SpineFamily{SpineFamily::Kind::Star, n - 1, 0};
    if (auto sides = bipartition_sizes(g)) {
        auto [u, v] = *sides;
        if (g.edge_count() == u * v) return SpineFamily{SpineFamily::Kind::CompleteBipartite, u, v};
    }
    return std::nullopt;
}

std::optional<Spine> recognize_spine(const Graph& x) {
    if (x.vertex_count() == 0) return std::nullopt;
    Spine spine;
    for (const auto& members : connected_components(x)) {
        auto family = detect_family(induced_subgraph(x, members));
        if (!family) return std::nullopt;
        spine.push_back(*family);
    }
    return spine;
}

bool is_star_shaped(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) return false;
    int centers = 0, leaves = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) ++centers;
        if (g.degree(v) == 1) ++leaves;
    }
    // P_2 has two degree-1 vertices that are both centers.
    return centers >= 1 && centers + leaves >= n && leaves >= n - 1;
}

}  // namespace corona
