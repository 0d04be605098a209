#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace splinedim {

/// Dense matrix of exact rationals, row-major. Shape is fixed at construction.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

using RatVector = std::vector<Rational>;

/// Exact rank by fraction-free (Bareiss) elimination. Each row is first
/// scaled to an integer vector; row scaling does not change the rank.
inline std::size_t mat_rank(const RatMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < C; ++j) {
            const Integer& den = m(i, j).get_den();
            if (den != 1) l = lcm(l, den);
        }
        for (std::size_t j = 0; j < C; ++j) {
            const Rational& q = m(i, j);
            a[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && a[piv][col] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[rank]);
        const Integer& p = a[rank][col];
        for (std::size_t i = rank + 1; i < R; ++i) {
            Integer f = a[i][col];
            for (std::size_t j = col + 1; j < C; ++j) {
                Integer v = p * a[i][j] - f * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

/// Reduced row-echelon form. Pivot rule: leftmost column with a nonzero
/// entry among the remaining rows, first such row. Returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(RatMatrix& a) {
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && a(piv, c) == 0) ++piv;
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a(piv, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < C; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Canonical right-nullspace basis from the RREF: one vector per free
/// column, in increasing column order, with that free coordinate equal to 1.
inline std::vector<RatVector> mat_nullspace(const RatMatrix& m) {
    RatMatrix a = m;
    auto pivots = rref_in_place(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline RatVector mat_apply(const RatMatrix& m, const RatVector& v) {
    RatVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
    return out;
}

inline RatMatrix hstack(const std::vector<RatMatrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = blocks.front().rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
        cols += b.cols();
    }
    RatMatrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
        off += b.cols();
    }
    return out;
}

} // namespace splinedim
