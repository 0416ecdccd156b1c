#include "corona/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <queue>

#include "corona/errors.hpp"

namespace corona {

namespace {

// 128-bit vertex set; enough for every solver input (graphs are capped at 63
// vertices, edge conflict graphs at 128).
struct Bits128 {
    std::uint64_t lo = 0, hi = 0;

    static Bits128 singleton(int v) {
        return v < 64 ? Bits128{std::uint64_t{1} << v, 0}
                      : Bits128{0, std::uint64_t{1} << (v - 64)};
    }
    bool test(int v) const {
        return v < 64 ? (lo >> v) & 1 : (hi >> (v - 64)) & 1;
    }
    void set(int v) {
        if (v < 64) lo |= std::uint64_t{1} << v;
        else hi |= std::uint64_t{1} << (v - 64);
    }
    void reset(int v) {
        if (v < 64) lo &= ~(std::uint64_t{1} << v);
        else hi &= ~(std::uint64_t{1} << (v - 64));
    }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool any() const { return lo || hi; }
    Bits128 operator&(Bits128 o) const { return {lo & o.lo, hi & o.hi}; }
    Bits128 operator|(Bits128 o) const { return {lo | o.lo, hi | o.hi}; }
    Bits128 andnot(Bits128 o) const { return {lo & ~o.lo, hi & ~o.hi}; }
    int first() const {
        if (lo) return std::countr_zero(lo);
        return 64 + std::countr_zero(hi);
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t w = lo; w; w &= w - 1) f(std::countr_zero(w));
        for (std::uint64_t w = hi; w; w &= w - 1) f(64 + std::countr_zero(w));
    }
};

struct MisSolver {
    int n;
    std::vector<Bits128> adj;
    Bits128 best;
    int best_size = 0;

    // Greedy clique cover of the candidate set: the number of cliques bounds
    // the independence number of the candidate subgraph from above.
    int clique_cover_bound(Bits128 candidates) const {
        std::vector<Bits128> cliques;
        candidates.for_each([&](int v) {
            for (auto& clique : cliques) {
                if ((clique.andnot(adj[v])).any()) continue;  // v must see all members
                clique.set(v);
                return;
            }
            cliques.push_back(Bits128::singleton(v));
        });
        return static_cast<int>(cliques.size());
    }

    void expand(Bits128 candidates, Bits128 current, int size) {
        // Reductions: a candidate with no candidate-neighbors always joins; a
        // degree-1 candidate joins ahead of its neighbor.
        for (bool changed = true; changed;) {
            changed = false;
            Bits128 pending = candidates;
            bool stop = false;
            pending.for_each([&](int v) {
                if (stop) return;
                int d = (adj[v] & candidates).count();
                if (d == 0) {
                    current.set(v);
                    ++size;
                    candidates.reset(v);
                    changed = true;
                } else if (d == 1) {
                    current.set(v);
                    ++size;
                    candidates = candidates.andnot(adj[v] | Bits128::singleton(v));
                    changed = true;
                    stop = true;  // candidate degrees are stale now
                }
            });
        }
        if (!candidates.any()) {
            if (size > best_size) {
                best_size = size;
                best = current;
            }
            return;
        }
        if (size + clique_cover_bound(candidates) <= best_size) return;

        // Branch vertex: highest degree within candidates, lowest index on ties.
        int branch = -1, branch_deg = -1;
        candidates.for_each([&](int v) {
            int d = (adj[v] & candidates).count();
            if (d > branch_deg) {
                branch_deg = d;
                branch = v;
            }
        });

        Bits128 in_branch = current;
        in_branch.set(branch);
        expand(candidates.andnot(adj[branch] | Bits128::singleton(branch)), in_branch, size + 1);
        expand(candidates.andnot(Bits128::singleton(branch)), current, size);
    }
};

Bits128 solve_mis(int n, const std::vector<Bits128>& adj) {
    MisSolver solver{n, adj, {}, 0};
    Bits128 all;
    for (int v = 0; v < n; ++v) all.set(v);
    solver.expand(all, {}, 0);
    return solver.best;
}

}  // namespace

IndependentSetResult independence_number(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices || n > 128)
        throw CapacityError("independence_number: " + std::to_string(n) +
                            " vertices exceeds cap " + std::to_string(std::min(max_vertices, 128)));
    std::vector<Bits128> adj(n);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v].set(w);
    Bits128 best = solve_mis(n, adj);
    IndependentSetResult result;
    best.for_each([&](int v) { result.witness.push_back(v); });
    result.size = static_cast<int>(result.witness.size());
    return result;
}

InducedMatchingResult induced_matching_number(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw CapacityError("induced_matching_number: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds cap " + std::to_string(max_vertices));
    const auto edges = g.edges();
    const int k = static_cast<int>(edges.size());
    if (k > 128)
        throw CapacityError("induced_matching_number: " + std::to_string(k) +
                            " edges exceeds the 128-edge conflict-graph cap");

    // Two edges conflict when they share an endpoint or an edge of g joins
    // their endpoints; independent sets of the conflict graph are exactly the
    // induced matchings.
    std::vector<Bits128> conflict(k);
    for (int i = 0; i < k; ++i) {
        auto [a, b] = edges[i];
        for (int j = i + 1; j < k; ++j) {
            auto [c, d] = edges[j];
            bool clash = a == c || a == d || b == c || b == d || g.adjacent(a, c) ||
                         g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d);
            if (clash) {
                conflict[i].set(j);
                conflict[j].set(i);
            }
        }
    }
    Bits128 best = solve_mis(k, conflict);
    InducedMatchingResult result;
    best.for_each([&](int i) { result.witness.push_back(edges[i]); });
    result.size = static_cast<int>(result.witness.size());
    return result;
}

bool is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 2) return true;

    // Maximum-cardinality search; order[0] is eliminated last.
    std::vector<int> weight(n, 0), order;
    std::vector<bool> numbered(n, false);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
        numbered[pick] = true;
        order.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!numbered[w]) ++weight[w];
    }

    // position[v] = elimination index; v is eliminated before u iff
    // position[v] > position[u]. Verify the perfect elimination property.
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    for (int v = 0; v < n; ++v) {
        int parent = -1;
        for (int w : g.neighbors(v))
            if (position[w] < position[v] && (parent == -1 || position[w] > position[parent]))
                parent = w;
        if (parent == -1) continue;
        for (int w : g.neighbors(v))
            if (position[w] < position[parent] && !g.adjacent(parent, w)) return false;
    }
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> component(n, -1);
    std::vector<std::vector<int>> result;
    for (int start = 0; start < n; ++start) {
        if (component[start] != -1) continue;
        int id = static_cast<int>(result.size());
        result.emplace_back();
        std::queue<int> queue;
        queue.push(start);
        component[start] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            result[id].push_back(v);
            for (int w : g.neighbors(v))
                if (component[w] == -1) {
                    component[w] = id;
                    queue.push(w);
                }
        }
        std::sort(result[id].begin(), result[id].end());
    }
    return result;
}

}  // namespace corona
