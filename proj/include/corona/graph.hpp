#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace corona {

/// A finite simple labeled graph. Vertices are 0-based indices internally;
/// labels carry the display convention (y_i for corona spines, x_i_j for
/// copies). Immutable after construction: every operation returns a new graph.
class Graph {
public:
    Graph() = default;

    /// n isolated vertices labeled x1..xn.
    explicit Graph(int n);

    /// Builds from an edge list over 0-based endpoints. Rejects loops,
    /// duplicate edges and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(int u, int v) const;

    /// Neighbor set of v as a bitset row; only valid while the graph fits in
    /// 64 bits (the construction cap is enforced by the oracles, not here).
    std::uint64_t neighbor_mask(int v) const { return masks_[v]; }
    bool has_masks() const { return vertex_count() <= 64; }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Edges as sorted (u < v) pairs, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const;

    /// Label-exact equality.
    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

/// True when adjacency structure matches vertex-for-vertex (labels ignored).
bool structurally_equal(const Graph& a, const Graph& b);

// -- Families ---------------------------------------------------------------

Graph path_graph(int r);                          // r >= 0; E(P_1) empty
Graph cycle_graph(int r);                         // r >= 3
Graph complete_graph(int r);                      // r >= 1; E(K_1) empty
Graph star_graph(int k);                          // k >= 1 leaves; k+1 vertices, center first
Graph complete_bipartite_graph(int u, int v);     // u, v >= 1
Graph null_graph(int r);                          // r >= 0

// -- Products and derived graphs --------------------------------------------

/// Positions of the spine and copy vertices inside a corona product.
struct CoronaLabeling {
    std::vector<int> spine_vertices;               // y_1..y_n
    std::vector<std::vector<int>> copy_vertices;   // copy_vertices[i] = x_{i,1}..x_{i,m}
};

struct CoronaResult {
    Graph graph;
    CoronaLabeling labeling;
};

/// X (.) H: one copy of X, |V(X)| copies of H, the i-th spine vertex joined to
/// every vertex of the i-th copy. Spine vertices come first. Requires
/// |V(X)| >= 1; H may be empty (the product is then X itself).
CoronaResult corona_product(const Graph& x, const Graph& h);

/// t pendant leaves on every vertex of X; identical to corona(X, null(t)).
CoronaResult bristle(const Graph& x, int t);      // t >= 1

Graph disjoint_union(const std::vector<Graph>& parts);

/// Subgraph induced on the (0-based, distinct) vertex set u; keeps labels.
Graph induced_subgraph(const Graph& g, const std::vector<int>& u);

std::vector<int> isolated_vertices(const Graph& g);

bool is_complete(const Graph& g);                 // K_1 counts as complete
bool is_null(const Graph& g);                     // no edges
bool is_trivial(const Graph& g);                  // exactly one vertex

}  // namespace corona
