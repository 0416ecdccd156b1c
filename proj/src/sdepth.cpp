#include "corona/sdepth.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "corona/errors.hpp"

namespace corona {

namespace {

// (cardinality, lexicographic on the ascending vertex list). Within equal
// cardinality the list order is decided by the smallest vertex in the
// symmetric difference.
bool face_less(std::uint32_t a, std::uint32_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    if (a == b) return false;
    const std::uint32_t diff = a ^ b;
    return (a >> std::countr_zero(diff)) & 1;
}

struct PartitionSearch {
    std::vector<std::uint32_t> faces;  // sorted by face_less
    std::map<std::uint32_t, int> index_of;
    std::vector<int> max_superset_size;  // per face: largest face containing it
    std::vector<char> covered;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> chosen;
    int target = 0;

    bool cover(std::uint32_t bottom, std::uint32_t top, char value) {
        // Marks (or unmarks) every face in [bottom, top]; returns false and
        // rolls back nothing when marking hits an already-covered face.
        const std::uint32_t diff = top ^ bottom;
        if (value) {
            for (std::uint32_t sub = diff;; sub = (sub - 1) & diff) {
                if (covered[index_of.at(bottom | sub)]) {
                    for (std::uint32_t undo = diff; undo != sub; undo = (undo - 1) & diff)
                        covered[index_of.at(bottom | undo)] = 0;
                    return false;
                }
                covered[index_of.at(bottom | sub)] = 1;
                if (sub == 0) break;
            }
        } else {
            for (std::uint32_t sub = diff;; sub = (sub - 1) & diff) {
                covered[index_of.at(bottom | sub)] = 0;
                if (sub == 0) break;
            }
        }
        return true;
    }

    bool search(std::size_t hint) {
        while (hint < faces.size() && covered[hint]) ++hint;
        if (hint == faces.size()) return true;
        const std::uint32_t bottom = faces[hint];
        // The first uncovered face must be the bottom of its interval: any
        // strictly smaller bottom would itself be uncovered and earlier.
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const std::uint32_t top = faces[i];
            if (std::popcount(top) < target) continue;
            if ((bottom & ~top) != 0) continue;
            if (!cover(bottom, top, 1)) continue;
            chosen.emplace_back(bottom, top);
            if (search(hint + 1)) return true;
            chosen.pop_back();
            cover(bottom, top, 0);
        }
        return false;
    }

    bool run(int t) {
        target = t;
        for (int bound : max_superset_size)
            if (bound < t) return false;
        std::fill(covered.begin(), covered.end(), 0);
        chosen.clear();
        return search(0);
    }
};

}  // namespace

int IntervalPartition::min_top_size() const {
    int result = 0;
    bool first = true;
    for (const auto& [bottom, top] : intervals) {
        const int size = std::popcount(top);
        result = first ? size : std::min(result, size);
        first = false;
    }
    return result;
}

bool is_valid_interval_partition(const SimplicialComplex& k, const IntervalPartition& partition) {
    std::map<std::uint32_t, int> hits;
    for (std::uint32_t face : k.faces) hits[face] = 0;
    for (const auto& [bottom, top] : partition.intervals) {
        if ((bottom & ~top) != 0) return false;
        if (!k.contains(bottom) || !k.contains(top)) return false;
        const std::uint32_t diff = top ^ bottom;
        for (std::uint32_t sub = diff;; sub = (sub - 1) & diff) {
            auto it = hits.find(bottom | sub);
            if (it == hits.end()) return false;
            ++it->second;
            if (sub == 0) break;
        }
    }
    for (const auto& [face, count] : hits)
        if (count != 1) return false;
    return true;
}

SdepthResult sdepth_oracle(const Graph& g, const OracleConfig& config) {
    const int n = g.vertex_count();
    if (n > config.max_sdepth_vertices || n > 31)
        throw CapacityError("sdepth_oracle: " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(std::min(config.max_sdepth_vertices, 31)));

    const SimplicialComplex complex = independence_complex(g, std::max(n, 1));

    PartitionSearch state;
    state.faces = complex.faces;
    std::sort(state.faces.begin(), state.faces.end(), face_less);
    for (std::size_t i = 0; i < state.faces.size(); ++i)
        state.index_of[state.faces[i]] = static_cast<int>(i);
    state.covered.assign(state.faces.size(), 0);

    // max_superset_size by descending cardinality: facets bound themselves.
    state.max_superset_size.assign(state.faces.size(), 0);
    for (std::size_t i = state.faces.size(); i-- > 0;) {
        const std::uint32_t face = state.faces[i];
        int best = std::popcount(face);
        for (int v = 0; v < n; ++v) {
            if ((face >> v) & 1) continue;
            auto it = state.index_of.find(face | (std::uint32_t{1} << v));
            if (it != state.index_of.end())
                best = std::max(best, state.max_superset_size[it->second]);
        }
        state.max_superset_size[i] = best;
    }

    // sdepth <= every face's reachable top size; binary search the largest
    // feasible target (feasibility is monotone decreasing in the target).
    int hi = n;
    for (int bound : state.max_superset_size) hi = std::min(hi, bound);
    int lo = 0;
    IntervalPartition best_witness;
    state.run(0);
    best_witness.intervals = state.chosen;
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        if (state.run(mid)) {
            lo = mid;
            best_witness.intervals = state.chosen;
        } else {
            hi = mid - 1;
        }
    }
    return SdepthResult{lo, std::move(best_witness)};
}

}  // namespace corona
