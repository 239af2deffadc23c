#pragma once

// Fraction-exact Gaussian elimination. Works for any exact field scalar;
// pivots are chosen as the first nonzero entry, never by magnitude.

#include "dfinv/scalar.hpp"

#include <optional>
#include <utility>

namespace dfinv::linalg {

template <typename Scalar>
struct Echelon {
    Matrix<Scalar> reduced;              // reduced row echelon form
    std::vector<Eigen::Index> pivots;    // pivot column of each nonzero row
};

template <typename Derived>
auto row_reduce(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    Echelon<Scalar> out{input.eval(), {}};
    auto& m = out.reduced;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row) m.row(p).swap(m.row(row));
        const Scalar inv = Scalar(1) / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Scalar factor = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
    return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> m = input;
    const Eigen::Index n = m.rows();
    Scalar det(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) return Scalar(0);
        if (p != col) {
            m.row(p).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        for (Eigen::Index i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Scalar factor = m(i, col) / m(col, col);
            for (Eigen::Index j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

/// Unique solution of a square system, or nullopt when singular.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    const Eigen::Index n = a.cols();
    Matrix<Scalar> aug(a.rows(), n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    auto ech = row_reduce(aug);
    if (static_cast<Eigen::Index>(ech.pivots.size()) != n || ech.pivots.back() == n) return std::nullopt;
    return Vector<Scalar>(ech.reduced.col(n).head(n));
}

/// Basis of the right null space, one column per free variable.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    auto ech = row_reduce(a);
    const Eigen::Index n = a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix<Scalar> basis(n, n - static_cast<Eigen::Index>(ech.pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vector<Scalar> v = Vector<Scalar>::Zero(n);
        v(free) = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v(ech.pivots[r]) = -ech.reduced(static_cast<Eigen::Index>(r), free);
        basis.col(k++) = v;
    }
    return basis;
}

/// Dimension of the affine hull of the given points (columns).
template <typename Derived>
Eigen::Index affine_dimension(const Eigen::MatrixBase<Derived>& points) {
    if (points.cols() == 0) return -1;
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> diffs(points.rows(), points.cols() - 1);
    for (Eigen::Index j = 1; j < points.cols(); ++j) diffs.col(j - 1) = points.col(j) - points.col(0);
    return diffs.cols() == 0 ? 0 : rank(diffs);
}

}  // namespace dfinv::linalg
