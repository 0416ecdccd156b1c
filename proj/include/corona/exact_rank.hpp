#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace corona {

using MatrixI64 = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixBig = Eigen::Matrix<boost::multiprecision::cpp_int, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

// Checked arithmetic: int64 reports overflow, arbitrary precision never does.
template <typename Scalar>
struct CheckedOps {
    static bool mul(const Scalar& a, const Scalar& b, Scalar& out) {
        out = a * b;
        return false;
    }
    static bool sub(const Scalar& a, const Scalar& b, Scalar& out) {
        out = a - b;
        return false;
    }
};

template <>
struct CheckedOps<std::int64_t> {
    static bool mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
        return __builtin_mul_overflow(a, b, &out);
    }
    static bool sub(std::int64_t a, std::int64_t b, std::int64_t& out) {
        return __builtin_sub_overflow(a, b, &out);
    }
};

}  // namespace detail

/// Rank of an integer matrix over the rationals by fraction-free Bareiss
/// elimination. Returns nullopt if the scalar type overflows (only possible
/// for fixed-width scalars).
template <typename Scalar>
std::optional<Eigen::Index> bareiss_rank(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    using Ops = detail::CheckedOps<Scalar>;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    Scalar prev = Scalar(1);
    const Scalar zero = Scalar(0);

    for (Eigen::Index step = 0; step < cols && rank < rows; ++step) {
        // Pivot search: first nonzero in the remaining block of this column.
        Eigen::Index pivot_row = -1;
        for (Eigen::Index i = rank; i < rows; ++i)
            if (m(i, step) != zero) {
                pivot_row = i;
                break;
            }
        if (pivot_row == -1) continue;
        if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));

        const Scalar pivot = m(rank, step);
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            const Scalar lead = m(i, step);
            for (Eigen::Index j = step + 1; j < cols; ++j) {
                Scalar t1, t2, num;
                if (Ops::mul(pivot, m(i, j), t1)) return std::nullopt;
                if (Ops::mul(lead, m(rank, j), t2)) return std::nullopt;
                if (Ops::sub(t1, t2, num)) return std::nullopt;
                m(i, j) = num / prev;  // exact by the Bareiss identity
            }
            m(i, step) = zero;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

/// Exact rank over characteristic 0: int64 pass first, arbitrary-precision
/// integers on overflow.
inline Eigen::Index rank_char0(const MatrixI64& m) {
    if (auto rank = bareiss_rank<std::int64_t>(m)) return *rank;
    MatrixBig big(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            big(i, j) = boost::multiprecision::cpp_int(m(i, j));
    return *bareiss_rank<boost::multiprecision::cpp_int>(std::move(big));
}

/// Rank over the prime field F_p by Gaussian elimination.
inline Eigen::Index rank_mod_p(MatrixI64 m, std::int64_t p) {
    if (p < 2) throw std::invalid_argument("rank_mod_p: characteristic must be a prime >= 2");
    const Eigen::Index rows = m.rows(), cols = m.cols();
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = ((m(i, j) % p) + p) % p;

    auto inv_mod = [p](std::int64_t a) {
        std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return ((t % p) + p) % p;
    };

    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot_row = -1;
        for (Eigen::Index i = rank; i < rows; ++i)
            if (m(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row == -1) continue;
        if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
        const std::int64_t inv = inv_mod(m(rank, col));
        for (Eigen::Index j = col; j < cols; ++j) m(rank, j) = m(rank, j) * inv % p;
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            const std::int64_t factor = m(i, col);
            if (factor == 0) continue;
            for (Eigen::Index j = col; j < cols; ++j)
                m(i, j) = ((m(i, j) - factor * m(rank, j)) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Rank over a field of the given characteristic (0 or a prime).
inline Eigen::Index exact_rank(const MatrixI64& m, std::int64_t characteristic) {
    return characteristic == 0 ? rank_char0(m) : rank_mod_p(m, characteristic);
}

/// Throws std::invalid_argument unless characteristic is 0 or a prime.
inline void validate_characteristic(std::int64_t characteristic) {
    if (characteristic == 0) return;
    if (characteristic < 2)
        throw std::invalid_argument("characteristic must be 0 or a prime");
    for (std::int64_t d = 2; d * d <= characteristic; ++d)
        if (characteristic % d == 0)
            throw std::invalid_argument("characteristic " + std::to_string(characteristic) +
                                        " is not prime");
}

struct Triplet {
    int row;
    int col;
    std::int64_t value;
};

/// Rank of a sparse integer matrix over characteristic 0 or p. Large inputs
/// are eliminated in sparse form, over Z with unit pivots only (no division,
/// no rounding); whatever resists unit pivoting, grows past the safe integer
/// window, or is small to begin with goes through the dense exact routines.
Eigen::Index sparse_exact_rank(int rows, int cols, const std::vector<Triplet>& entries,
                               std::int64_t characteristic);

}  // namespace corona
