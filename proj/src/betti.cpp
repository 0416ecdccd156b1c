#include "corona/betti.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "corona/errors.hpp"
#include "corona/exact_rank.hpp"
#include "corona/homology.hpp"

namespace corona {

int BettiTable::pdim() const {
    int result = 0;
    for (const auto& [key, value] : entries)
        if (value != 0) result = std::max(result, key.first);
    return result;
}

int BettiTable::reg() const {
    int result = 0;
    for (const auto& [key, value] : entries)
        if (value != 0) result = std::max(result, key.second - key.first);
    return result;
}

int BettiTable::depth() const { return n_vars - pdim(); }

nlohmann::json BettiTable::to_json() const {
    nlohmann::json json;
    json["n"] = n_vars;
    json["entries"] = nlohmann::json::array();
    for (const auto& [key, value] : entries)
        json["entries"].push_back({key.first, key.second, value});
    return json;
}

BettiTable BettiTable::from_json(const nlohmann::json& json) {
    BettiTable table;
    table.n_vars = json.at("n").get<int>();
    for (const auto& entry : json.at("entries"))
        table.entries[{entry.at(0).get<int>(), entry.at(1).get<int>()}] = entry.at(2).get<long long>();
    return table;
}

std::tuple<int, int, int> pdim_reg_depth(const BettiTable& table) {
    return {table.pdim(), table.reg(), table.depth()};
}

namespace {

using EntryMap = std::map<std::pair<int, int>, long long>;

// Reduced homology ranks (indexed by dimension + 1) of the independence
// complex of the graph given by adjacency masks over vertices 0..n-1.
std::vector<long long> component_ranks(const std::vector<std::uint32_t>& adjacency, int n,
                                       std::int64_t characteristic) {
    return detail::homology_from_groups(detail::independent_set_groups(adjacency, n),
                                        characteristic);
}

// Betti contributions of one vertex subset w. The induced graph splits into
// connected components whose independence complexes join; over a field the
// reduced homology ranks of a join convolve (H~_k(X*Y) sums
// H~_i x H~_j over i+j = k-1, and the +1-shifted rank vectors multiply like
// polynomials). Any acyclic factor kills the whole subset; an isolated
// vertex is the simplest such factor, which the caller already screens.
void accumulate_subset(std::uint32_t w, const std::vector<std::uint32_t>& adjacency,
                       std::int64_t characteristic, EntryMap& into) {
    const int size = std::popcount(w);

    // Compress w's vertices to 0..size-1.
    std::vector<int> members;
    members.reserve(size);
    for (std::uint32_t rest = w; rest; rest &= rest - 1)
        members.push_back(std::countr_zero(rest));
    std::vector<std::uint32_t> local(size, 0);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (a != b && (adjacency[members[a]] >> members[b]) & 1)
                local[a] |= std::uint32_t{1} << b;

    // Connected components of the compressed graph, as masks.
    std::vector<std::uint32_t> component_masks;
    std::uint32_t seen = 0;
    const std::uint32_t all = (size == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << size) - 1;
    while (seen != all) {
        std::uint32_t frontier = (~seen & all) & (~(~seen & all) + 1);  // lowest unseen bit
        std::uint32_t component = 0;
        while (frontier) {
            component |= frontier;
            std::uint32_t next = 0;
            for (std::uint32_t rest = frontier; rest; rest &= rest - 1)
                next |= local[std::countr_zero(rest)];
            frontier = next & ~component;
        }
        component_masks.push_back(component);
        seen |= component;
    }

    std::vector<long long> ranks{1};  // multiplicative identity of the convolution
    for (std::uint32_t mask : component_masks) {
        const int k = std::popcount(mask);
        std::vector<int> verts;
        verts.reserve(k);
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            verts.push_back(std::countr_zero(rest));
        std::vector<std::uint32_t> sub(k, 0);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (a != b && (local[verts[a]] >> verts[b]) & 1) sub[a] |= std::uint32_t{1} << b;
        const auto factor = component_ranks(sub, k, characteristic);
        bool trivial = true;
        for (long long v : factor)
            if (v != 0) trivial = false;
        if (trivial) return;  // a contractible factor makes the join acyclic

        std::vector<long long> next(ranks.size() + factor.size() - 1, 0);
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            if (ranks[i] == 0) continue;
            for (std::size_t j = 0; j < factor.size(); ++j)
                next[i + j] += ranks[i] * factor[j];
        }
        ranks = std::move(next);
    }

    for (int d = -1; d + 1 < static_cast<int>(ranks.size()); ++d) {
        const long long rank = ranks[d + 1];
        if (rank > 0) into[{size - 1 - d, size}] += rank;
    }
}

}  // namespace

BettiTable betti_table(const Graph& g, const OracleConfig& config) {
    validate_characteristic(config.characteristic);
    const int n = g.vertex_count();
    if (n > config.max_oracle_vertices || n > 25)
        throw CapacityError("betti_table: " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(std::min(config.max_oracle_vertices, 25)));

    std::vector<std::uint32_t> adjacency(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adjacency[v] |= std::uint32_t{1} << w;

    const std::uint64_t total = std::uint64_t{1} << n;
    int workers = config.workers > 0 ? config.workers
                                     : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<int>(std::min<std::uint64_t>(workers, total));

    auto run_range = [&](std::uint64_t begin, std::uint64_t end, EntryMap& into) {
        for (std::uint64_t w = begin; w < end; ++w) {
            bool cone = false;
            for (std::uint32_t rest = static_cast<std::uint32_t>(w); rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                if ((adjacency[v] & w) == 0) {
                    cone = true;
                    break;
                }
            }
            if (cone) continue;
            if (w == 0) {
                into[{0, 0}] += 1;  // the empty subset: H~_{-1} of {empty} is K
                continue;
            }
            accumulate_subset(static_cast<std::uint32_t>(w), adjacency, config.characteristic, into);
        }
    };

    std::vector<EntryMap> partial(workers);
    if (workers == 1) {
        run_range(0, total, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / workers;
        for (int t = 0; t < workers; ++t) {
            const std::uint64_t begin = chunk * t;
            const std::uint64_t end = (t + 1 == workers) ? total : chunk * (t + 1);
            pool.emplace_back(run_range, begin, end, std::ref(partial[t]));
        }
        for (auto& thread : pool) thread.join();
    }

    BettiTable table;
    table.n_vars = n;
    for (const auto& part : partial)
        for (const auto& [key, value] : part) table.entries[key] += value;
    return table;
}

}  // namespace corona
