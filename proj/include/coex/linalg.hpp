#pragma once

#include "coex/rational.hpp"

#include <utility>

namespace coex {

template <class Scalar>
struct LdltResult {
    bool positive_semidefinite = false;
    int rank = 0;
};

/// Exact LDL^T with symmetric (diagonal) pivoting. At each step the largest
/// remaining diagonal entry is eliminated; the matrix is PSD iff no negative
/// pivot appears and the trailing block is zero once every diagonal is zero.
/// Only meaningful for exact scalars.
template <class Scalar>
LdltResult<Scalar> ldlt_psd(MatrixX<Scalar> a) {
    LdltResult<Scalar> out;
    const Eigen::Index n = a.rows();
    if (a.cols() != n) return out;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (a(i, j) != a(j, i)) return out;
        }
    }
    for (Eigen::Index step = 0; step < n; ++step) {
        Eigen::Index pivot = step;
        for (Eigen::Index i = step + 1; i < n; ++i) {
            if (a(i, i) > a(pivot, pivot)) pivot = i;
        }
        if (a(pivot, pivot) < Scalar(0)) return out;
        if (a(pivot, pivot) == Scalar(0)) {
            for (Eigen::Index i = step; i < n; ++i) {
                for (Eigen::Index j = step; j < n; ++j) {
                    if (a(i, j) != Scalar(0)) return out;
                }
            }
            break;
        }
        if (pivot != step) {
            a.row(pivot).swap(a.row(step));
            a.col(pivot).swap(a.col(step));
        }
        const Scalar d = a(step, step);
        for (Eigen::Index i = step + 1; i < n; ++i) {
            if (a(i, step) == Scalar(0)) continue;
            const Scalar l = a(i, step) / d;
            for (Eigen::Index j = step + 1; j < n; ++j) a(i, j) -= l * a(step, j);
        }
        for (Eigen::Index i = step + 1; i < n; ++i) {
            a(i, step) = Scalar(0);
            a(step, i) = Scalar(0);
        }
        ++out.rank;
    }
    out.positive_semidefinite = true;
    return out;
}

/// Rank by fraction-exact Gaussian elimination with row pivoting.
template <class Scalar>
int exact_rank(MatrixX<Scalar> a) {
    int rank = 0;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = rank;
        while (pivot < rows && a(pivot, col) == Scalar(0)) ++pivot;
        if (pivot == rows) continue;
        a.row(pivot).swap(a.row(rank));
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            if (a(i, col) == Scalar(0)) continue;
            const Scalar f = a(i, col) / a(rank, col);
            for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// x^T a x without expression templates (works for any exact scalar).
template <class Scalar>
Scalar quadratic_form(const MatrixX<Scalar>& a, const VectorX<Scalar>& x) {
    Scalar total(0);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (x(i) == Scalar(0)) continue;
        Scalar row(0);
        for (Eigen::Index j = 0; j < a.cols(); ++j) row += a(i, j) * x(j);
        total += x(i) * row;
    }
    return total;
}

/// R * diag(d) * R^T.
template <class Scalar>
MatrixX<Scalar> factored_product(const MatrixX<Scalar>& r, const VectorX<Scalar>& d) {
    const Eigen::Index g = r.rows();
    MatrixX<Scalar> q = MatrixX<Scalar>::Zero(g, g);
    for (Eigen::Index k = 0; k < r.cols(); ++k) {
        if (d(k) == Scalar(0)) continue;
        for (Eigen::Index i = 0; i < g; ++i) {
            if (r(i, k) == Scalar(0)) continue;
            const Scalar left = r(i, k) * d(k);
            for (Eigen::Index j = 0; j < g; ++j) q(i, j) += left * r(j, k);
        }
    }
    return q;
}

}  // namespace coex
