#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "turnover/matrix.hpp"

namespace turnover {

// Subspace of R^ambient given by an explicit basis (rows of `basis`).
struct LinearSubspace {
    int ambient = 0;
    std::vector<std::vector<Scalar>> basis;
    int rank() const { return static_cast<int>(basis.size()); }
};

// Kernel of M. Exact backend: elimination over the field, tol ignored
// and must not be supplied. Floating backend: rank-revealing QR with
// column pivoting, threshold tol * |R_11|; tol is mandatory.
LinearSubspace kernel_basis(const SquareMatrix& M, std::optional<double> tol = std::nullopt);

// Kernel of the vertical stack [M_1; M_2; ...]; all blocks n x n.
LinearSubspace joint_kernel(const std::vector<SquareMatrix>& Ms,
                            std::optional<double> tol = std::nullopt);

int matrix_rank(const SquareMatrix& M, std::optional<double> tol = std::nullopt);

// exp(M) by scaling and squaring with a truncated series; floating only.
// Terms are added until the next one falls below tol times the partial sum.
SquareMatrix matrix_exponential(const SquareMatrix& M, double tol);

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

// Outcome of the real spectral analysis. When the matrix is not
// diagonalizable over R the verdict carries the reason instead of
// fabricated eigenvectors; the characteristic roots are always kept.
struct EigenDecomposition {
    bool real_diagonalizable = false;
    std::vector<EigenPair> pairs; // sorted by eigenvalue, descending
    std::vector<std::complex<double>> roots;
    std::string failure_reason;
};

EigenDecomposition eigen_decomposition(const SquareMatrix& M, double tol);

// Induced action on Lambda^2 R^4 in the lexicographic pair basis
// e01, e02, e03, e12, e13, e23.
SquareMatrix exterior_square(const SquareMatrix& g);

// Conjugation action X -> g X g^-1 on traceless 4x4 matrices in the
// fixed 15-element basis used by traceless_coordinates. Requires
// det(g) = 1 (within det_tol on the floating backend).
SquareMatrix adjoint_action(const SquareMatrix& g, double det_tol = 1e-9);

// Coordinates of a traceless 4x4 matrix in the basis: the twelve
// E_ij (i != j, row-major order) then E11-E22, E22-E33, E33-E44.
std::vector<Scalar> traceless_coordinates(const SquareMatrix& X);
SquareMatrix traceless_from_coordinates(const std::vector<Scalar>& c, Backend backend);

// Given Re + i*Im conjugating one real pencil to another over C, finds a
// real point Re + x*Im of the pencil with nonzero determinant. Scanning
// x = 0..n suffices: det(Re + x*Im) is a polynomial of degree <= n, so
// n+1 zeros would force it to vanish identically.
SquareMatrix realify_conjugator(const SquareMatrix& re, const SquareMatrix& im);

} // namespace turnover
