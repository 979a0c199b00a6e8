#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over Q(i): reduced row echelon spans,
 *        rank, nullspaces and linear solves.
 *
 * Everything here is deterministic; in particular RowSpace holds the unique
 * RREF basis of the span it represents, so two spans are equal iff their
 * RowSpace rows compare equal.
 */

#include <optional>
#include <utility>
#include <vector>

#include "loopgrass/errors.hpp"
#include "loopgrass/rational.hpp"

namespace loopgrass {

using QiVec = std::vector<GaussianRational>;

inline bool is_zero_vec(const QiVec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// A subspace of Q(i)^cols held as its reduced row echelon basis,
/// rows ordered by pivot column.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<QiVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after reduction against the basis.
    QiVec reduce(QiVec v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const GaussianRational c = v[pivots_[k]];  // by value: the loop overwrites v[pivot]
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < cols_; ++j) v[j] -= c * rows_[k][j];
        }
        return v;
    }

    bool contains(const QiVec& v) const { return is_zero_vec(reduce(v)); }

    /// Coordinates of v in the row basis, or nullopt if v is outside the span.
    std::optional<QiVec> coordinates(QiVec v) const {
        QiVec coeff(rows_.size(), GaussianRational::zero());
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            GaussianRational c = v[pivots_[k]];
            if (c.is_zero()) continue;
            coeff[k] = c;
            for (std::size_t j = 0; j < cols_; ++j) v[j] -= c * rows_[k][j];
        }
        if (!is_zero_vec(v)) return std::nullopt;
        return coeff;
    }

    /// Insert a vector, keeping the basis in RREF. Returns true if the dimension grew.
    bool insert(QiVec v) {
        if (v.size() != cols_) throw std::invalid_argument("RowSpace::insert: size mismatch");
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < cols_ && v[p].is_zero()) ++p;
        if (p == cols_) return false;
        GaussianRational inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        // back-substitute into existing rows
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const GaussianRational c = rows_[k][p];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < cols_; ++j) rows_[k][j] -= c * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool operator==(const RowSpace& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }
    bool operator!=(const RowSpace& o) const { return !(*this == o); }

private:
    std::size_t cols_;
    std::vector<QiVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Dense matrix, row-major.
struct QiMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<GaussianRational> data;

    QiMatrix() = default;
    QiMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    const GaussianRational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    GaussianRational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

namespace detail {
/// In-place RREF; returns pivot columns. Deterministic (first nonzero row wins).
inline std::vector<std::size_t> rref(QiMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        GaussianRational inv = m.at(row, col).inverse();
        for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            GaussianRational c = m.at(i, col);
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= c * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
}  // namespace detail

inline std::size_t rank(QiMatrix m) { return detail::rref(m).size(); }

/// Basis of {x : A x = 0}.
inline std::vector<QiVec> nullspace(QiMatrix a) {
    auto pivots = detail::rref(a);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QiVec> basis;
    for (std::size_t free = 0; free < a.cols; ++free) {
        if (is_pivot[free]) continue;
        QiVec v(a.cols, GaussianRational::zero());
        v[free] = GaussianRational::one();
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct LinearSolution {
    bool consistent = false;
    QiVec particular;          // one solution when consistent
    std::vector<QiVec> kernel; // homogeneous solutions
    bool unique() const { return consistent && kernel.empty(); }
};

/// Solve A x = b exactly.
inline LinearSolution solve_linear(const QiMatrix& a, const QiVec& b) {
    if (b.size() != a.rows) throw std::invalid_argument("solve_linear: size mismatch");
    QiMatrix aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto pivots = detail::rref(aug);
    LinearSolution sol;
    if (!pivots.empty() && pivots.back() == a.cols) return sol;  // 0 = 1 row
    sol.consistent = true;
    sol.particular.assign(a.cols, GaussianRational::zero());
    for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug.at(k, a.cols);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < a.cols; ++free) {
        if (is_pivot[free]) continue;
        QiVec v(a.cols, GaussianRational::zero());
        v[free] = GaussianRational::one();
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug.at(k, free);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace loopgrass
