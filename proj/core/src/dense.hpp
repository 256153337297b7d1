#pragma once

// Internal rectangular elimination kernels shared by linalg, cohomology
// and the verification battery. Not installed.

#include <cmath>
#include <cstddef>
#include <vector>

#include "turnover/errors.hpp"
#include "turnover/scalar.hpp"

namespace turnover::detail {

template <class T>
struct Dense {
    int rows = 0, cols = 0;
    std::vector<T> a; // row-major

    Dense() = default;
    Dense(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Reduced row echelon form over the field; returns pivot columns.
inline std::vector<int> rref_exact(Dense<QuadExt>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
        QuadExt inv = m(row, col).inverse();
        for (int j = col; j < m.cols; ++j) m(row, j) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            QuadExt f = m(r, col);
            if (f.is_zero()) continue;
            for (int j = col; j < m.cols; ++j) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank_exact(Dense<QuadExt> m) { return static_cast<int>(rref_exact(m).size()); }

// Kernel basis rows from the reduced echelon form (free-column method).
inline std::vector<std::vector<QuadExt>> kernel_exact(Dense<QuadExt> m) {
    std::vector<int> pivots = rref_exact(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<QuadExt>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<QuadExt> v(m.cols);
        v[free] = QuadExt(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Householder QR with column pivoting. Returns the permutation; R is
// left in m (upper trapezoid), Q is discarded. The numerical rank uses
// the threshold tol * |R_11|.
inline std::vector<int> qrcp(Dense<double>& m) {
    int rows = m.rows, cols = m.cols;
    std::vector<int> perm(cols);
    std::vector<double> colnorm2(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
        perm[j] = j;
        for (int i = 0; i < rows; ++i) colnorm2[j] += m(i, j) * m(i, j);
    }
    int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
        int best = k;
        for (int j = k + 1; j < cols; ++j)
            if (colnorm2[j] > colnorm2[best]) best = j;
        if (best != k) {
            for (int i = 0; i < rows; ++i) std::swap(m(i, k), m(i, best));
            std::swap(colnorm2[k], colnorm2[best]);
            std::swap(perm[k], perm[best]);
        }
        double norm = 0.0;
        for (int i = k; i < rows; ++i) norm += m(i, k) * m(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            colnorm2[k] = 0.0;
            continue;
        }
        double alpha = m(k, k) >= 0 ? -norm : norm;
        std::vector<double> v(rows - k);
        v[0] = m(k, k) - alpha;
        for (int i = k + 1; i < rows; ++i) v[i - k] = m(i, k);
        double vnorm2 = 0.0;
        for (double x : v) vnorm2 += x * x;
        if (vnorm2 > 0.0) {
            for (int j = k; j < cols; ++j) {
                double dot = 0.0;
                for (int i = k; i < rows; ++i) dot += v[i - k] * m(i, j);
                double f = 2.0 * dot / vnorm2;
                for (int i = k; i < rows; ++i) m(i, j) -= f * v[i - k];
            }
        }
        m(k, k) = alpha;
        for (int i = k + 1; i < rows; ++i) m(i, k) = 0.0;
        for (int j = k + 1; j < cols; ++j) colnorm2[j] -= m(k, j) * m(k, j);
    }
    return perm;
}

inline int rank_float(Dense<double> m, double tol) {
    qrcp(m);
    int steps = std::min(m.rows, m.cols);
    double top = std::fabs(m(0, 0));
    if (top == 0.0) return 0;
    int r = 0;
    for (int k = 0; k < steps; ++k)
        if (std::fabs(m(k, k)) > tol * top) ++r;
    return r;
}

inline std::vector<std::vector<double>> kernel_float(Dense<double> m, double tol) {
    std::vector<int> perm = qrcp(m);
    int steps = std::min(m.rows, m.cols);
    double top = std::fabs(m(0, 0));
    int rank = 0;
    if (top > 0.0)
        for (int k = 0; k < steps; ++k)
            if (std::fabs(m(k, k)) > tol * top) ++rank;
    std::vector<std::vector<double>> basis;
    // Null vectors in permuted coordinates: solve R11 * x = -R12 column
    // by column, append the unit block, then undo the permutation.
    for (int free = rank; free < m.cols; ++free) {
        std::vector<double> x(m.cols, 0.0);
        x[free] = 1.0;
        for (int i = rank - 1; i >= 0; --i) {
            double s = -m(i, free);
            for (int j = i + 1; j < rank; ++j) s -= m(i, j) * x[j];
            x[i] = s / m(i, i);
        }
        std::vector<double> v(m.cols, 0.0);
        for (int j = 0; j < m.cols; ++j) v[perm[j]] = x[j];
        double norm = 0.0;
        for (double c : v) norm += c * c;
        norm = std::sqrt(norm);
        for (double& c : v) c /= norm;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Least-squares residual of the best approximation of w inside the row
// span of `basis` (rows need not be orthonormal). Euclidean norm.
inline double span_residual(const std::vector<std::vector<double>>& basis,
                            const std::vector<double>& w) {
    std::vector<std::vector<double>> ortho;
    for (const auto& b : basis) {
        std::vector<double> v = b;
        for (const auto& u : ortho) {
            double dot = 0.0;
            for (size_t i = 0; i < v.size(); ++i) dot += u[i] * v[i];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * u[i];
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 1e-300) {
            for (double& x : v) x /= norm;
            ortho.push_back(std::move(v));
        }
    }
    std::vector<double> r = w;
    for (const auto& u : ortho) {
        double dot = 0.0;
        for (size_t i = 0; i < r.size(); ++i) dot += u[i] * r[i];
        for (size_t i = 0; i < r.size(); ++i) r[i] -= dot * u[i];
    }
    double norm = 0.0;
    for (double x : r) norm += x * x;
    return std::sqrt(norm);
}

} // namespace turnover::detail
