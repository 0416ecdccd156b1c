#include "corona/exact_rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace corona {

namespace {

// With every magnitude at most 2^30 before a step, the worst update
// |a - f*b| stays below 2^61: no int64 overflow anywhere in a step.
constexpr std::int64_t kGrowthLimit = std::int64_t{1} << 30;

MatrixI64 dense_from_triplets(int rows, int cols, const std::vector<Triplet>& entries) {
    MatrixI64 m = MatrixI64::Zero(rows, cols);
    for (const auto& t : entries) m(t.row, t.col) += t.value;
    return m;
}

struct SparseEliminator {
    std::vector<std::unordered_map<int, std::int64_t>> row_entries;
    std::vector<std::unordered_set<int>> col_rows;
    std::vector<char> row_active, col_active;
    std::int64_t modulus;  // 0 = integers, unit pivots only
    std::int64_t max_magnitude = 1;

    SparseEliminator(int rows, int cols, const std::vector<Triplet>& entries, std::int64_t p)
        : row_entries(rows), col_rows(cols), row_active(rows, 1), col_active(cols, 1), modulus(p) {
        for (const auto& t : entries) {
            std::int64_t value = t.value;
            if (modulus) value = ((value % modulus) + modulus) % modulus;
            if (value == 0) continue;
            auto [it, fresh] = row_entries[t.row].emplace(t.col, 0);
            it->second += value;
            if (modulus) it->second %= modulus;
            if (it->second == 0) {
                row_entries[t.row].erase(it);
                col_rows[t.col].erase(t.row);
                continue;
            }
            max_magnitude = std::max<std::int64_t>(max_magnitude, std::llabs(it->second));
            col_rows[t.col].insert(t.row);
        }
    }

    bool is_pivot_value(std::int64_t v) const { return modulus ? v != 0 : (v == 1 || v == -1); }

    // Fill-free pivot candidates: rows or columns with a single entry.
    std::vector<int> pending_rows, pending_cols;

    void seed_worklists() {
        for (int r = 0; r < static_cast<int>(row_entries.size()); ++r)
            if (row_entries[r].size() == 1) pending_rows.push_back(r);
        for (int c = 0; c < static_cast<int>(col_rows.size()); ++c)
            if (col_rows[c].size() == 1) pending_cols.push_back(c);
    }

    void note_shrunk_row(int r) {
        if (row_active[r] && row_entries[r].size() == 1) pending_rows.push_back(r);
    }
    void note_shrunk_col(int c) {
        if (col_active[c] && col_rows[c].size() == 1) pending_cols.push_back(c);
    }

    // A singleton row or column eliminates without fill; candidates are
    // revalidated at pop time since the matrix has moved on.
    std::pair<int, int> pop_free_pivot() {
        while (!pending_rows.empty()) {
            const int r = pending_rows.back();
            pending_rows.pop_back();
            if (!row_active[r] || row_entries[r].size() != 1) continue;
            const auto& [c, v] = *row_entries[r].begin();
            if (is_pivot_value(v)) return {r, c};
        }
        while (!pending_cols.empty()) {
            const int c = pending_cols.back();
            pending_cols.pop_back();
            if (!col_active[c] || col_rows[c].size() != 1) continue;
            const int r = *col_rows[c].begin();
            const auto it = row_entries[r].find(c);
            if (it != row_entries[r].end() && is_pivot_value(it->second)) return {r, it->first};
        }
        return {-1, -1};
    }

    // Cheapest admissible pivot by Markowitz count; row -1 when none left.
    std::pair<int, int> pick_pivot() {
        if (auto free = pop_free_pivot(); free.first != -1) return free;
        long long best_score = -1;
        int best_row = -1, best_col = -1;
        for (int c = 0; c < static_cast<int>(col_rows.size()); ++c) {
            if (!col_active[c] || col_rows[c].empty()) continue;
            for (int r : col_rows[c]) {
                const auto it = row_entries[r].find(c);
                if (it == row_entries[r].end() || !is_pivot_value(it->second)) continue;
                const long long score = static_cast<long long>(row_entries[r].size() - 1) *
                                        static_cast<long long>(col_rows[c].size() - 1);
                if (best_score == -1 || score < best_score) {
                    best_score = score;
                    best_row = r;
                    best_col = c;
                    if (best_score == 0) return {best_row, best_col};
                }
            }
        }
        return {best_row, best_col};
    }

    std::int64_t inverse(std::int64_t a) const {
        std::int64_t t = 0, new_t = 1, r = modulus, new_r = ((a % modulus) + modulus) % modulus;
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return ((t % modulus) + modulus) % modulus;
    }

    // One full Schur-complement step on (pr, pc); the state stays consistent.
    void eliminate(int pr, int pc) {
        const std::int64_t pivot = row_entries[pr].at(pc);
        const std::int64_t pivot_inverse = modulus ? inverse(pivot) : 0;
        const std::vector<int> hit(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : hit) {
            if (r == pr) continue;
            std::int64_t factor = row_entries[r].at(pc);
            factor = modulus ? factor * pivot_inverse % modulus : (pivot == 1 ? factor : -factor);
            for (const auto& [c, pivot_value] : row_entries[pr]) {
                std::int64_t delta = factor * pivot_value;
                if (modulus) delta %= modulus;
                auto [it, fresh] = row_entries[r].emplace(c, 0);
                it->second -= delta;
                if (modulus) it->second = ((it->second % modulus) + modulus) % modulus;
                if (it->second == 0) {
                    row_entries[r].erase(it);
                    col_rows[c].erase(r);
                    note_shrunk_col(c);
                } else {
                    max_magnitude = std::max<std::int64_t>(max_magnitude, std::llabs(it->second));
                    if (fresh) col_rows[c].insert(r);
                }
            }
            note_shrunk_row(r);
        }
        for (const auto& [c, value] : row_entries[pr]) {
            col_rows[c].erase(pr);
            note_shrunk_col(c);
        }
        row_entries[pr].clear();
        row_active[pr] = 0;
        col_active[pc] = 0;
    }

    // Remaining active entries, compacted; shape returned alongside.
    std::tuple<std::vector<Triplet>, int, int> remaining() const {
        std::vector<Triplet> rest;
        std::unordered_map<int, int> row_index, col_index;
        for (int r = 0; r < static_cast<int>(row_entries.size()); ++r) {
            if (!row_active[r]) continue;
            for (const auto& [c, v] : row_entries[r]) {
                const int rr = row_index.emplace(r, static_cast<int>(row_index.size())).first->second;
                const int cc = col_index.emplace(c, static_cast<int>(col_index.size())).first->second;
                rest.push_back({rr, cc, v});
            }
        }
        return {std::move(rest), static_cast<int>(row_index.size()),
                static_cast<int>(col_index.size())};
    }
};

}  // namespace

Eigen::Index sparse_exact_rank(int rows, int cols, const std::vector<Triplet>& entries,
                               std::int64_t characteristic) {
    if (static_cast<long long>(rows) * cols <= 64 * 64)
        return exact_rank(dense_from_triplets(rows, cols, entries), characteristic);

    SparseEliminator state(rows, cols, entries, characteristic);
    state.seed_worklists();
    Eigen::Index rank = 0;
    while (state.max_magnitude <= kGrowthLimit) {
        const auto [pr, pc] = state.pick_pivot();
        if (pr == -1) break;
        state.eliminate(pr, pc);
        ++rank;
    }
    const auto [rest, r, c] = state.remaining();
    if (rest.empty()) return rank;
    return rank + exact_rank(dense_from_triplets(r, c, rest), characteristic);
}

}  // namespace corona
