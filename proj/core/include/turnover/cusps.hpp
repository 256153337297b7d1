#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "turnover/linalg.hpp"
#include "turnover/representation.hpp"

namespace turnover {

enum class EndKind { hyperbolic_cusp, diagonalizable_positive, other };
const char* end_kind_name(EndKind k);

// Smallest k with (A - I)^k = 0 (k = 1 means A = I); -1 when A - I is
// not nilpotent. Exact backend: tol must not be supplied. Floating
// backend: sup-norm test against a mandatory tol.
int unipotency_degree(const SquareMatrix& A, std::optional<double> tol = std::nullopt);

struct CuspVerdict {
    EndKind kind = EndKind::other;
    std::vector<std::complex<double>> spectrum; // characteristic roots of the a^2 b image
    // determinant of the a^2 b image: the numerically stable form of the
    // eigenvalue product (root clustering loses digits at repeated values)
    double eigenvalue_product = 0.0;
    int unipotency = -1;          // degree of the a^2 b image
    bool near_degenerate = false; // repeated or nearly repeated eigenvalues
    std::vector<EigenPair> eigenframe; // filled for the diagonalizable verdict
    std::string detail;
};

// Restriction to the translation subgroup: hyperbolic-cusp when both
// generator images are unipotent of degree at most 3, distinct from the
// identity and commuting; diagonalizable-positive when the a^2 b image
// has a real positive spectrum containing 1 with product 1; other
// otherwise, with the evidence kept. Exact images are tested exactly on
// the unipotent path; the spectral path always runs in floating point.
CuspVerdict classify_end(const Representation& rho, double tol = 1e-9,
                         double reality_tol = 1e-7, double degeneracy_gap = 1e-4);

// Projective eigenvector frame for the slice family: p_inf = e1,
// p1 = similarity(1, theta) (1, 2t, 0, 2t^2), and p2, p3 the rotations
// of p1 by similarity(1, 2 pi / 3). Needs t > 0.
struct EigenFrame {
    std::array<std::vector<double>, 4> points; // p_inf, p1, p2, p3
    double t = 0.0, theta = 0.0;
};

EigenFrame reference_eigenframe(double t, double theta);

struct FrameReport {
    EigenFrame frame;
    // rejection of Psi(a^2 b) p from the line of p, per frame point
    std::array<double, 4> line_deviations{};
    // Psi(a) should send the lines p1 -> p2 -> p3 -> p1
    std::array<double, 3> permutation_deviations{};
    // distance from each frame point to the nearest computed eigenspace;
    // -1 when the spectral decomposition is unavailable
    std::array<double, 4> eigenspace_residuals{};
    double frame_determinant = 0.0; // of the column-normalized frame
    bool pass = false;              // all line deviations below tol
    std::string note;
};

// Builds the slice representation at (u, v) = t (cos 3 theta, sin 3 theta)
// and measures the frame against it. Failures are reported, never thrown.
FrameReport check_frame_against_slice(double t, double theta, double tol);

struct FaithfulnessVerdict {
    bool obstructed = false;
    std::string witness;
};

// A small power of a^2 b or the generator a mapping to the identity
// contradicts faithfulness; nothing else is attempted.
FaithfulnessVerdict faithfulness_obstruction(const Representation& rho,
                                             std::optional<double> tol = std::nullopt);

} // namespace turnover
