#include "corona/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "corona/errors.hpp"
#include "corona/exact_rank.hpp"

namespace corona {

SimplicialComplex SimplicialComplex::from_facets(int ground_size,
                                                 const std::vector<std::uint32_t>& facets) {
    std::set<std::uint32_t> closure;
    closure.insert(0);
    for (std::uint32_t facet : facets) {
        // Every submask of a facet is a face.
        std::uint32_t sub = facet;
        while (true) {
            closure.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
    }
    SimplicialComplex k;
    k.ground_size = ground_size;
    k.faces.assign(closure.begin(), closure.end());
    return k;
}

SimplicialComplex SimplicialComplex::full_simplex(int ground_size) {
    SimplicialComplex k;
    k.ground_size = ground_size;
    k.faces.resize(std::size_t{1} << ground_size);
    for (std::size_t f = 0; f < k.faces.size(); ++f) k.faces[f] = static_cast<std::uint32_t>(f);
    return k;
}

int SimplicialComplex::dimension() const {
    int top = -1;
    for (std::uint32_t face : faces) top = std::max(top, std::popcount(face) - 1);
    return top;
}

bool SimplicialComplex::contains(std::uint32_t face) const {
    return std::binary_search(faces.begin(), faces.end(), face);
}

bool SimplicialComplex::is_closed() const {
    if (!contains(0)) return false;
    for (std::uint32_t face : faces)
        for (std::uint32_t rest = face; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (!contains(face & ~(std::uint32_t{1} << v))) return false;
        }
    return true;
}

SimplicialComplex independence_complex(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices || n > 31)
        throw CapacityError("independence_complex: " + std::to_string(n) +
                            " vertices exceeds cap " + std::to_string(std::min(max_vertices, 31)));
    std::vector<std::uint32_t> adjacency(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adjacency[v] |= std::uint32_t{1} << w;

    SimplicialComplex k;
    k.ground_size = n;
    for (const auto& group : detail::independent_set_groups(adjacency, n))
        k.faces.insert(k.faces.end(), group.begin(), group.end());
    std::sort(k.faces.begin(), k.faces.end());
    return k;
}

namespace detail {

std::vector<std::vector<std::uint32_t>> independent_set_groups(
    const std::vector<std::uint32_t>& adjacency, int n) {
    // Grow independent sets by inserting vertices in ascending order; every
    // independent set appears exactly once.
    std::vector<std::uint32_t> faces{0};
    for (int v = 0; v < n; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << v;
        const std::size_t snapshot = faces.size();
        for (std::size_t i = 0; i < snapshot; ++i)
            if ((faces[i] & adjacency[v]) == 0) faces.push_back(faces[i] | bit);
    }
    std::vector<std::vector<std::uint32_t>> groups(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t face : faces) groups[std::popcount(face)].push_back(face);
    while (groups.size() > 1 && groups.back().empty()) groups.pop_back();
    for (auto& group : groups) std::sort(group.begin(), group.end());
    return groups;
}

namespace {

// Boundary matrix from cardinality-c faces to cardinality-(c-1) faces, global
// orientation by sorted vertex order, sign (-1)^position.
std::vector<Triplet> boundary_triplets(const std::vector<std::uint32_t>& from,
                                       const std::vector<std::uint32_t>& to) {
    std::vector<Triplet> del;
    del.reserve(from.size() * 4);
    for (std::size_t col = 0; col < from.size(); ++col) {
        const std::uint32_t face = from[col];
        int position = 0;
        for (std::uint32_t rest = face; rest; rest &= rest - 1, ++position) {
            const std::uint32_t bit = rest & (~rest + 1);
            const std::uint32_t subface = face & ~bit;
            auto it = std::lower_bound(to.begin(), to.end(), subface);
            del.push_back({static_cast<int>(it - to.begin()), static_cast<int>(col),
                           (position % 2 == 0) ? 1 : -1});
        }
    }
    return del;
}

}  // namespace

std::vector<long long> homology_from_groups(const std::vector<std::vector<std::uint32_t>>& groups,
                                            std::int64_t characteristic) {
    const int top_card = static_cast<int>(groups.size()) - 1;  // top face cardinality

    // ranks_del[c] = rank of the boundary map C_{c-1} -> C_{c-2} (faces of
    // cardinality c to cardinality c-1); the map to the empty face is the
    // all-ones row of rank 1 whenever vertices exist.
    std::vector<Eigen::Index> ranks_del(static_cast<std::size_t>(top_card) + 2, 0);
    if (top_card >= 1 && !groups[1].empty()) ranks_del[1] = 1;
    for (int c = 2; c <= top_card; ++c) {
        if (groups[c].empty()) continue;
        ranks_del[c] = sparse_exact_rank(static_cast<int>(groups[c - 1].size()),
                                         static_cast<int>(groups[c].size()),
                                         boundary_triplets(groups[c], groups[c - 1]),
                                         characteristic);
    }

    // dim H~_d = f_d - rank del_d - rank del_{d+1}, with faces of cardinality
    // c sitting in homological dimension d = c - 1.
    std::vector<long long> ranks(static_cast<std::size_t>(top_card) + 1, 0);
    for (int d = -1; d < top_card; ++d) {
        const int c = d + 1;
        const long long f = static_cast<long long>(groups[c].size());
        ranks[c] = f - ranks_del[c] - ranks_del[c + 1];
    }
    return ranks;
}

}  // namespace detail

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& k,
                                              std::int64_t characteristic) {
    validate_characteristic(characteristic);
    std::vector<std::vector<std::uint32_t>> groups(
        static_cast<std::size_t>(std::max(k.dimension() + 1, 0)) + 1);
    for (std::uint32_t face : k.faces) groups[std::popcount(face)].push_back(face);
    for (auto& group : groups) std::sort(group.begin(), group.end());
    return detail::homology_from_groups(groups, characteristic);
}

}  // namespace corona
