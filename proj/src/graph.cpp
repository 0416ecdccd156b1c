#include "corona/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace corona {

namespace {

std::vector<std::string> default_labels(int n, const std::string& stem) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(stem + std::to_string(i));
    return labels;
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
    adjacency_.resize(n);
    masks_.assign(n, 0);
    labels_ = default_labels(n, "x");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return from_edges(n, edges, default_labels(n, "x"));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("graph: label count must equal vertex count");
    {
        std::set<std::string> unique(labels.begin(), labels.end());
        if (static_cast<int>(unique.size()) != n)
            throw std::invalid_argument("graph: labels must be unique");
    }

    Graph g;
    g.adjacency_.resize(n);
    g.masks_.assign(n, 0);
    g.labels_ = std::move(labels);

    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range [1.." +
                                        std::to_string(n) + "]");
        if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second)
            throw std::invalid_argument("graph: duplicate edge");
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        if (n <= 64) {
            g.masks_[u] |= std::uint64_t{1} << v;
            g.masks_[v] |= std::uint64_t{1} << u;
        }
        ++g.edge_count_;
    }
    for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency_[u])
            if (u < v) result.emplace_back(u, v);
    return result;
}

bool structurally_equal(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (a.neighbors(v) != b.neighbors(v)) return false;
    return true;
}

Graph path_graph(int r) {
    if (r < 0) throw std::invalid_argument("path(" + std::to_string(r) + "): needs r >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(r, edges);
}

Graph cycle_graph(int r) {
    if (r < 3) throw std::invalid_argument("cycle(" + std::to_string(r) + "): needs r >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, r - 1);
    return Graph::from_edges(r, edges);
}

Graph complete_graph(int r) {
    if (r < 1) throw std::invalid_argument("complete(" + std::to_string(r) + "): needs r >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(r, edges);
}

Graph star_graph(int k) {
    if (k < 1) throw std::invalid_argument("star(" + std::to_string(k) + "): needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(k + 1, edges);
}

Graph complete_bipartite_graph(int u, int v) {
    if (u < 1 || v < 1)
        throw std::invalid_argument("kbip(" + std::to_string(u) + "," + std::to_string(v) +
                                    "): needs u, v >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < u; ++i)
        for (int j = 0; j < v; ++j) edges.emplace_back(i, u + j);
    return Graph::from_edges(u + v, edges);
}

Graph null_graph(int r) {
    if (r < 0) throw std::invalid_argument("null(" + std::to_string(r) + "): needs r >= 0");
    return Graph(r);
}

CoronaResult corona_product(const Graph& x, const Graph& h) {
    const int n = x.vertex_count();
    const int m = h.vertex_count();
    if (n == 0) throw std::invalid_argument("corona: spine graph must have at least one vertex");

    const int total = n * (m + 1);
    std::vector<std::string> labels;
    labels.reserve(total);
    for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            labels.push_back("x" + std::to_string(i) + "_" + std::to_string(j));

    CoronaLabeling labeling;
    labeling.spine_vertices.resize(n);
    labeling.copy_vertices.assign(n, std::vector<int>(m));
    for (int i = 0; i < n; ++i) labeling.spine_vertices[i] = i;
    auto copy_vertex = [&](int i, int j) { return n + i * m + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) labeling.copy_vertices[i][j] = copy_vertex(i, j);

    std::vector<std::pair<int, int>> edges = x.edges();
    const auto h_edges = h.edges();
    for (int i = 0; i < n; ++i) {
        for (auto [a, b] : h_edges) edges.emplace_back(copy_vertex(i, a), copy_vertex(i, b));
        for (int j = 0; j < m; ++j) edges.emplace_back(i, copy_vertex(i, j));
    }

    return CoronaResult{Graph::from_edges(total, edges, std::move(labels)), std::move(labeling)};
}

CoronaResult bristle(const Graph& x, int t) {
    if (t < 1) throw std::invalid_argument("bristle: needs t >= 1");
    return corona_product(x, null_graph(t));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const auto& part : parts) total += part.vertex_count();
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (const auto& part : parts) {
        for (auto [u, v] : part.edges()) edges.emplace_back(offset + u, offset + v);
        offset += part.vertex_count();
    }
    return Graph::from_edges(total, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& u) {
    std::vector<int> position(g.vertex_count(), -1);
    std::vector<std::string> labels;
    labels.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        int v = u[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (position[v] != -1)
            throw std::invalid_argument("induced_subgraph: duplicate vertex");
        position[v] = static_cast<int>(i);
        labels.push_back(g.label(v));
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : u)
        for (int w : g.neighbors(v))
            if (v < w && position[w] != -1) edges.emplace_back(position[v], position[w]);
    return Graph::from_edges(static_cast<int>(u.size()), edges, std::move(labels));
}

std::vector<int> isolated_vertices(const Graph& g) {
    std::vector<int> result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) result.push_back(v);
    return result;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2 && n >= 1;
}

bool is_null(const Graph& g) { return g.edge_count() == 0; }

bool is_trivial(const Graph& g) { return g.vertex_count() == 1; }

}  // namespace corona
