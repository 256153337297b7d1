#pragma once

#include <array>
#include <optional>
#include <vector>

#include "turnover/representation.hpp"

namespace turnover {

enum class ComponentLabel { s1, s2, off_surface };
const char* component_name(ComponentLabel c); // "S1" | "S2" | "off-surface"

enum class TraceSource { sl3_block, sl4_minus_one };

// The nine traces at the 3x3 level: a, b, ab, then their inverses, then
// a b^-1, a^-1 b and the commutator a b a^-1 b^-1.
struct TraceCoordinates {
    Scalar x, y, z;
    Scalar u, v, w;
    Scalar r, s, tau;
    TraceSource source = TraceSource::sl3_block;
};

// p(r, s, tau) = tau^2 - (rs - 3) tau + r^3 + s^3 - 6 rs + 9.
Scalar surface_polynomial(const Scalar& r, const Scalar& s, const Scalar& tau);

// (dp/dr, dp/ds, dp/dtau).
std::array<Scalar, 3> surface_gradient(const Scalar& r, const Scalar& s, const Scalar& tau);

// Reads off the nine traces. The images must either preserve the 3+1
// block split with unit last entry, or jointly fix a vector (then each
// 3x3-level trace is the 4x4 trace less one). Anything else is refused;
// raw word traces through evaluate() remain available.
TraceCoordinates trace_coordinates(const Representation& rho,
                                   std::optional<double> tol = std::nullopt);

// Closed form of (r, s, tau) on the diagonal family. The product of the
// x_i must be 1: r and s are the elementary symmetric sums and
// tau = x2/x1 + x3/x2 + x1/x3.
std::array<Scalar, 3> diagonal_to_traces(const Scalar& x1, const Scalar& x2, const Scalar& x3,
                                         std::optional<double> tol = std::nullopt);

// Off the surface when p does not vanish; on it, S1 needs r and s both
// at least 3.
ComponentLabel classify_component(const Scalar& r, const Scalar& s, const Scalar& tau,
                                  std::optional<double> tol = std::nullopt);

// Lexicographically least among the three cyclic rotations.
std::array<Scalar, 3> cyclic_canonical_form(const Scalar& x1, const Scalar& x2,
                                            const Scalar& x3);

struct SurfacePoint {
    Scalar r, s, tau;
    Scalar residual;
    ComponentLabel component = ComponentLabel::off_surface;
    std::array<Scalar, 3> gradient;
};

SurfacePoint surface_point(const Scalar& r, const Scalar& s, const Scalar& tau,
                           std::optional<double> tol = std::nullopt);

struct SurfaceSample {
    std::array<Scalar, 3> triple;
    std::array<Scalar, 3> canonical;
    SurfacePoint point;
};

// Uniformly spaced values from lo to hi inclusive.
std::vector<Scalar> linear_grid(const Scalar& lo, const Scalar& hi, int count);

struct SurfaceGrid {
    std::vector<Scalar> x1_values, x2_values;
    int sign1 = 1, sign2 = 1; // sign applied to each axis
};

// Row-major sweep over the grid with x3 = 1/(x1 x2). Axis values must
// avoid zero.
std::vector<SurfaceSample> sample_surface(const SurfaceGrid& grid,
                                          std::optional<double> tol = std::nullopt);

struct SingularLocusReport {
    std::vector<double> gradient_norms;
    std::vector<char> flagged; // gradient norm at or below grad_tol
    int flagged_count = 0;
    // flagged samples all sit within sup-distance `radius` of (3,3,3)
    bool flagged_only_near_center = true;
    // samples at (3,3,3) itself, if any, are flagged
    bool center_samples_flagged = true;
};

SingularLocusReport singular_locus_check(const std::vector<SurfacePoint>& samples,
                                         double grad_tol, double radius);

} // namespace turnover
