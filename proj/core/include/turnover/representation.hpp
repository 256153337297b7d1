#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "turnover/linalg.hpp"
#include "turnover/matrix.hpp"
#include "turnover/words.hpp"

namespace turnover {

enum class FamilyTag { hyperbolic, slice, diagonal, isolated, custom };

// A representation of a turnover group into SL(4, R), carried by the
// images of the two generators.
class Representation {
public:
    Representation(TurnoverPresentation presentation, SquareMatrix image_a,
                   SquareMatrix image_b, FamilyTag family = FamilyTag::custom,
                   std::vector<Scalar> parameters = {});

    const TurnoverPresentation& presentation() const { return presentation_; }
    const SquareMatrix& image_a() const { return image_a_; }
    const SquareMatrix& image_b() const { return image_b_; }
    FamilyTag family() const { return family_; }
    const std::vector<Scalar>& parameters() const { return parameters_; }
    Backend backend() const { return image_a_.backend(); }
    int dimension() const { return image_a_.size(); }

    SquareMatrix evaluate(const Word& w) const;
    SquareMatrix evaluate(const std::string& letters) const {
        return evaluate(Word::parse(letters));
    }

private:
    TurnoverPresentation presentation_;
    SquareMatrix image_a_, image_b_;
    FamilyTag family_;
    std::vector<Scalar> parameters_;
};

// Parabolic translation fixing the flag at infinity; the top-right entry
// is (x^2 + y^2) / 2.
SquareMatrix cusp_translation(const Scalar& x, const Scalar& y);

// Block diagonal (r, rotation by theta, 1/r); floating backend.
SquareMatrix similarity(double r, double theta);

// Exact rotation block diag(1, R_{2 pi k / n}, 1); n in {1, 2, 3, 4, 6},
// the orders whose cosines live in Q(sqrt 3).
SquareMatrix turnover_rotation(int n, int k = 1);

// 3-cycle permutation matrix e1 -> e3 -> e2 -> e1.
SquareMatrix permutation_p3(Backend backend = Backend::exact);

// Embeds SL(3) as the upper block of SL(4); unimodularity is enforced.
SquareMatrix include_sl3(const SquareMatrix& m, std::optional<double> tol = std::nullopt);

// Embeds SL(2) x SL(2) block diagonally; each factor must be unimodular.
SquareMatrix include_sl2_pair(const SquareMatrix& top, const SquareMatrix& bottom,
                              std::optional<double> tol = std::nullopt);

// Exact holonomy of the Euclidean turnover acting on the light cone:
// defined only for Euclidean order triples.
Representation hyperbolic_cusp_holonomy(const TurnoverPresentation& presentation);

// Infinitesimal generator K(u, v) of the deformation slice; floating.
SquareMatrix slice_generator(double u, double v);

// Two-parameter deformation of the (3,3,3) holonomy: the generator `a`
// keeps its rotation image and a^2 b moves to exp K(u, v).
Representation slice_representation(double u, double v, double series_tol = 1e-14);

// (u, v) = t (cos 3s, sin 3s).
std::pair<double, double> polar_slice_parameters(double t, double s);

// Diagonal 3+1 family: a -> included 3-cycle, a^2 b -> diag(x1,x2,x3,1).
// The product x1 x2 x3 must be 1 (within tol on the floating backend).
Representation diagonal_representation(const Scalar& x1, const Scalar& x2, const Scalar& x3,
                                       std::optional<double> tol = std::nullopt);

struct RelationReport {
    std::array<double, 3> deviations; // sup-norm distance from the identity
    bool pass = false;
};

// Exact backend: pass means the relator images are exactly the identity
// and tol must not be supplied. Floating backend: tol is mandatory.
RelationReport verify_relations(const Representation& rho,
                                std::optional<double> tol = std::nullopt);

// Tangent cocycle stored by its values on the generators; the slice
// generator value z(a^2 b) is kept alongside for convenience.
struct TangentCocycle {
    SquareMatrix at_a, at_b, at_slice_generator;
};

// The two coordinate directions of the slice at the origin, as cocycles:
// z(a) = 0 and z(a^2 b) is the right-translated derivative of the slice
// map. Exact rational data.
std::pair<TangentCocycle, TangentCocycle> transversality_cocycles();

// Raw directional derivatives of (u, v) -> exp K(u, v) at the origin,
// before right translation back to the identity.
std::pair<SquareMatrix, SquareMatrix> slice_derivative_matrices();

// diag(x,1,1,1/x)-conjugate of the unit cusp translation; contracts to
// the identity as x -> 0.
SquareMatrix degeneration_conjugate(const Scalar& x);

// One finite-image representation built from 2+2 rotation blocks.
// blocks = (x1, a1, x2, a2) index {identity, R, R^-1} per block: the
// image of a is T[a1] + T[a2] and the image of a^2 b is T[x1] + T[x2].
Representation isolated_block_representation(const std::array<int, 4>& blocks);

struct IsolatedClass {
    std::array<int, 4> blocks; // lexicographically least in its orbit
    Representation rep;
    int case_label;    // 1: R+R, 2: R+R^-1, 3: R+1, 4: identity image of a^2 b
    int a2b_order;     // 1 or 3
    int partner_index; // trace-equal SL-distinct partner, or -1
};

// Evidence that a trace-equal pair of classes is conjugate only through
// orientation-reversing matrices.
struct IntertwinerEvidence {
    std::pair<int, int> pair_indices;
    int space_dimension;
    bool reflection_conjugator_found;
    bool positive_det_sample_found;
    int samples;
};

struct IsolatedEnumeration {
    std::vector<IsolatedClass> classes;
    int expected_count = 19;
    bool count_matches = false;
    std::array<int, 4> case_tallies{0, 0, 0, 0};
    int on_surface_discarded = 0;
    std::vector<IntertwinerEvidence> collision_evidence;
};

// Enumerates the finite-image block representations up to the
// orientation-preserving symmetries (block swap, simultaneous inversion),
// discarding the one class that lies on the diagonal character surface.
// The surviving count is reported against expected_count rather than
// silently truncated.
IsolatedEnumeration enumerate_isolated_points();

} // namespace turnover
