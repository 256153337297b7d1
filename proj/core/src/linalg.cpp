#include "turnover/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "dense.hpp"

namespace turnover {

namespace {

detail::Dense<QuadExt> to_dense_exact(const SquareMatrix& M) {
    detail::Dense<QuadExt> d(M.size(), M.size());
    d.a = M.exact_entries();
    return d;
}

detail::Dense<double> to_dense_float(const SquareMatrix& M) {
    detail::Dense<double> d(M.size(), M.size());
    d.a = M.float_entries();
    return d;
}

LinearSubspace subspace_from_exact(int ambient, std::vector<std::vector<QuadExt>> rows) {
    LinearSubspace s;
    s.ambient = ambient;
    for (auto& r : rows) {
        std::vector<Scalar> v;
        v.reserve(r.size());
        for (auto& x : r) v.emplace_back(x);
        s.basis.push_back(std::move(v));
    }
    return s;
}

LinearSubspace subspace_from_float(int ambient, std::vector<std::vector<double>> rows) {
    LinearSubspace s;
    s.ambient = ambient;
    for (auto& r : rows) {
        std::vector<Scalar> v;
        v.reserve(r.size());
        for (double x : r) v.push_back(Scalar::floating(x));
        s.basis.push_back(std::move(v));
    }
    return s;
}

double require_tol(std::optional<double> tol, const char* op) {
    if (!tol) throw config_error(std::string(op) + " on the floating backend requires a tolerance");
    if (*tol <= 0) throw config_error(std::string(op) + " tolerance must be positive");
    return *tol;
}

void reject_tol(std::optional<double> tol, const char* op) {
    if (tol) throw config_error(std::string(op) + " on the exact backend must not take a tolerance");
}

} // namespace

LinearSubspace kernel_basis(const SquareMatrix& M, std::optional<double> tol) {
    if (M.is_exact()) {
        reject_tol(tol, "kernel_basis");
        return subspace_from_exact(M.size(), detail::kernel_exact(to_dense_exact(M)));
    }
    double t = require_tol(tol, "kernel_basis");
    return subspace_from_float(M.size(), detail::kernel_float(to_dense_float(M), t));
}

LinearSubspace joint_kernel(const std::vector<SquareMatrix>& Ms, std::optional<double> tol) {
    if (Ms.empty()) throw dimension_error("joint_kernel needs at least one block");
    int n = Ms[0].size();
    Backend backend = Ms[0].backend();
    for (const auto& m : Ms) {
        if (m.size() != n) throw dimension_error("joint_kernel blocks must share one size");
        if (m.backend() != backend) throw backend_mismatch("joint_kernel blocks mix backends");
    }
    int rows = n * static_cast<int>(Ms.size());
    if (backend == Backend::exact) {
        reject_tol(tol, "joint_kernel");
        detail::Dense<QuadExt> d(rows, n);
        for (size_t b = 0; b < Ms.size(); ++b) {
            const auto& e = Ms[b].exact_entries();
            std::copy(e.begin(), e.end(), d.a.begin() + static_cast<long>(b) * n * n);
        }
        return subspace_from_exact(n, detail::kernel_exact(std::move(d)));
    }
    double t = require_tol(tol, "joint_kernel");
    detail::Dense<double> d(rows, n);
    for (size_t b = 0; b < Ms.size(); ++b) {
        const auto& e = Ms[b].float_entries();
        std::copy(e.begin(), e.end(), d.a.begin() + static_cast<long>(b) * n * n);
    }
    return subspace_from_float(n, detail::kernel_float(std::move(d), t));
}

int matrix_rank(const SquareMatrix& M, std::optional<double> tol) {
    if (M.is_exact()) {
        reject_tol(tol, "matrix_rank");
        return detail::rank_exact(to_dense_exact(M));
    }
    double t = require_tol(tol, "matrix_rank");
    return detail::rank_float(to_dense_float(M), t);
}

SquareMatrix matrix_exponential(const SquareMatrix& M, double tol) {
    if (M.is_exact())
        throw backend_mismatch("matrix exponential runs on the floating backend");
    if (tol <= 0) throw config_error("matrix exponential tolerance must be positive");
    int n = M.size();
    double norm = M.sup_norm() * n; // coarse bound on the operator norm
    int k = 0;
    while (norm > 0.5 && k < 64) {
        norm /= 2;
        ++k;
    }
    SquareMatrix A = M.scaled(Scalar::floating(std::ldexp(1.0, -k)));
    SquareMatrix total = SquareMatrix::identity(n, Backend::floating);
    SquareMatrix term = SquareMatrix::identity(n, Backend::floating);
    bool converged = false;
    for (int j = 1; j <= 80; ++j) {
        term = term * A;
        term = term.scaled(Scalar::floating(1.0 / j));
        total = total + term;
        if (term.sup_norm() <= tol * total.sup_norm()) {
            converged = true;
            break;
        }
    }
    if (!converged) throw internal_error("matrix exponential series failed to converge");
    for (int i = 0; i < k; ++i) total = total * total;
    return total;
}

namespace {

// Characteristic polynomial coefficients, monic, by the trace recursion
// A_1 = M, c_k = -tr(A_k)/k, A_{k+1} = M (A_k + c_k I).
std::vector<double> char_poly(const SquareMatrix& M) {
    int n = M.size();
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    SquareMatrix A = M;
    for (int k = 1; k <= n; ++k) {
        c[k] = -A.trace().float_value() / k;
        if (k < n) {
            SquareMatrix shifted = A;
            for (int i = 0; i < n; ++i)
                shifted.set(i, i, Scalar::floating(shifted.at(i, i).float_value() + c[k]));
            A = M * shifted;
        }
    }
    return c;
}

std::vector<std::complex<double>> poly_roots(const std::vector<double>& c) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> z(n);
    if (n == 0) return z;
    double radius = 0.0;
    for (int k = 1; k <= n; ++k) radius = std::max(radius, std::fabs(c[k]));
    radius = 1.0 + radius;
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        z[i] = acc * radius;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> r(c[0], 0.0);
        for (int k = 1; k <= n; ++k) r = r * x + c[k];
        return r;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0.0) {
                z[i] += std::complex<double>(1e-8, 1e-8);
                max_step = 1.0;
                continue;
            }
            std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-15 * radius) break;
    }
    return z;
}

} // namespace

EigenDecomposition eigen_decomposition(const SquareMatrix& Min, double tol) {
    if (tol <= 0) throw config_error("eigen decomposition tolerance must be positive");
    SquareMatrix M = Min.to_float();
    int n = M.size();
    EigenDecomposition out;
    if (n == 0) {
        out.real_diagonalizable = true;
        return out;
    }
    out.roots = poly_roots(char_poly(M));
    std::sort(out.roots.begin(), out.roots.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real()) return a.real() > b.real();
                  return a.imag() > b.imag();
              });

    double scale = 1.0;
    for (const auto& r : out.roots) scale = std::max(scale, std::abs(r));
    // Repeated roots limit the root finder to about sqrt(machine eps), so
    // clusters are never drawn tighter than 1e-6 * scale.
    double radius = std::max(tol, 1e-6) * scale;

    std::vector<std::vector<std::complex<double>>> clusters;
    std::vector<std::complex<double>> pending = out.roots;
    std::vector<bool> used(pending.size(), false);
    for (size_t i = 0; i < pending.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::complex<double>> cluster{pending[i]};
        used[i] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t j = 0; j < pending.size(); ++j) {
                if (used[j]) continue;
                for (const auto& c : cluster)
                    if (std::abs(pending[j] - c) <= radius) {
                        cluster.push_back(pending[j]);
                        used[j] = true;
                        grew = true;
                        break;
                    }
            }
        }
        clusters.push_back(std::move(cluster));
    }

    struct RealCluster {
        double value;
        int multiplicity;
    };
    std::vector<RealCluster> reals;
    for (const auto& cluster : clusters) {
        std::complex<double> mean(0.0, 0.0);
        for (const auto& c : cluster) mean += c;
        mean /= static_cast<double>(cluster.size());
        if (std::fabs(mean.imag()) > radius) {
            out.real_diagonalizable = false;
            out.failure_reason = "complex spectrum";
            return out;
        }
        reals.push_back({mean.real(), static_cast<int>(cluster.size())});
    }

    double kernel_tol = std::max(tol, 1e-6);
    std::vector<EigenPair> pairs;
    for (const auto& rc : reals) {
        SquareMatrix shifted = M;
        for (int i = 0; i < n; ++i)
            shifted.set(i, i, Scalar::floating(M.at(i, i).float_value() - rc.value));
        auto null_rows = detail::kernel_float(to_dense_float(shifted), kernel_tol);
        if (static_cast<int>(null_rows.size()) < rc.multiplicity) {
            out.real_diagonalizable = false;
            out.failure_reason = "defective eigenvalue " + std::to_string(rc.value);
            return out;
        }
        if (static_cast<int>(null_rows.size()) > rc.multiplicity) {
            out.real_diagonalizable = false;
            out.failure_reason = "eigenspace dimensions inconsistent with root clustering";
            return out;
        }
        for (auto& v : null_rows) pairs.push_back({rc.value, std::move(v)});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const EigenPair& a, const EigenPair& b) { return a.value > b.value; });
    out.pairs = std::move(pairs);
    out.real_diagonalizable = true;
    return out;
}

SquareMatrix exterior_square(const SquareMatrix& g) {
    if (g.size() != 4) throw dimension_error("exterior square expects a 4x4 matrix");
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    SquareMatrix out = SquareMatrix::zero(6, g.backend());
    for (int a = 0; a < 6; ++a) {
        int i = pairs[a][0], j = pairs[a][1];
        for (int b = 0; b < 6; ++b) {
            int k = pairs[b][0], l = pairs[b][1];
            out.set(a, b, g.at(i, k) * g.at(j, l) - g.at(i, l) * g.at(j, k));
        }
    }
    return out;
}

namespace {

// The fixed traceless basis: twelve E_ij (i != j) in row-major order,
// then E11-E22, E22-E33, E33-E44.
struct OffDiag {
    int i, j;
};

const std::vector<OffDiag>& off_diagonal_order() {
    static const std::vector<OffDiag> order = [] {
        std::vector<OffDiag> v;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) v.push_back({i, j});
        return v;
    }();
    return order;
}

} // namespace

std::vector<Scalar> traceless_coordinates(const SquareMatrix& X) {
    if (X.size() != 4) throw dimension_error("traceless coordinates expect a 4x4 matrix");
    Scalar tr = X.trace();
    if (X.is_exact()) {
        if (!tr.exact_value().is_zero()) throw domain_error("matrix has nonzero trace");
    } else if (std::fabs(tr.float_value()) > 1e-9 * std::max(1.0, X.sup_norm())) {
        throw domain_error("matrix has nonzero trace");
    }
    std::vector<Scalar> c;
    c.reserve(15);
    for (const auto& od : off_diagonal_order()) c.push_back(X.at(od.i, od.j));
    // Diagonal part d = c13 (E11-E22) + c14 (E22-E33) + c15 (E33-E44)
    // inverts to partial sums of the diagonal entries.
    Scalar d0 = X.at(0, 0);
    Scalar d1 = X.at(1, 1);
    Scalar d2 = X.at(2, 2);
    c.push_back(d0);
    c.push_back(d0 + d1);
    c.push_back(d0 + d1 + d2);
    return c;
}

SquareMatrix traceless_from_coordinates(const std::vector<Scalar>& c, Backend backend) {
    if (c.size() != 15) throw dimension_error("expected 15 coordinates");
    SquareMatrix X = SquareMatrix::zero(4, backend);
    const auto& order = off_diagonal_order();
    for (size_t k = 0; k < order.size(); ++k) X.set(order[k].i, order[k].j, c[k]);
    Scalar c1 = c[12], c2 = c[13], c3 = c[14];
    X.set(0, 0, c1);
    X.set(1, 1, c2 - c1);
    X.set(2, 2, c3 - c2);
    X.set(3, 3, -c3);
    return X;
}

SquareMatrix adjoint_action(const SquareMatrix& g, double det_tol) {
    if (g.size() != 4) throw dimension_error("adjoint action expects a 4x4 matrix");
    Scalar det = g.determinant();
    if (g.is_exact()) {
        if (!det.exact_value().is_one()) throw determinant_error("adjoint action needs det = 1");
    } else if (std::fabs(det.float_value() - 1.0) > det_tol) {
        throw determinant_error("adjoint action needs det = 1");
    }
    SquareMatrix ginv = g.inverse();
    SquareMatrix out = SquareMatrix::zero(15, g.backend());
    const auto& order = off_diagonal_order();
    for (int k = 0; k < 15; ++k) {
        SquareMatrix B = SquareMatrix::zero(4, g.backend());
        Scalar one = g.is_exact() ? Scalar(1) : Scalar::floating(1.0);
        if (k < 12) {
            B.set(order[k].i, order[k].j, one);
        } else {
            int d = k - 12;
            B.set(d, d, one);
            B.set(d + 1, d + 1, -one);
        }
        std::vector<Scalar> col = traceless_coordinates(g * B * ginv);
        for (int r = 0; r < 15; ++r) out.set(r, k, col[r]);
    }
    return out;
}

SquareMatrix realify_conjugator(const SquareMatrix& re, const SquareMatrix& im) {
    if (re.size() != im.size()) throw dimension_error("pencil parts differ in size");
    if (re.backend() != im.backend()) throw backend_mismatch("pencil parts mix backends");
    int n = re.size();
    for (int x = 0; x <= n; ++x) {
        Scalar factor = re.is_exact() ? Scalar(static_cast<long>(x))
                                      : Scalar::floating(static_cast<double>(x));
        SquareMatrix candidate = re + im.scaled(factor);
        Scalar det = candidate.determinant();
        bool invertible;
        if (re.is_exact()) {
            invertible = !det.exact_value().is_zero();
        } else {
            double guard = 1e-12 * std::max(1.0, std::pow(candidate.sup_norm(), n));
            invertible = std::fabs(det.float_value()) > guard;
        }
        if (invertible) return candidate;
    }
    // det(re + x im) has degree at most n, so n+1 integer zeros force the
    // whole pencil to be singular.
    throw domain_error("pencil is singular at every real parameter");
}

} // namespace turnover
