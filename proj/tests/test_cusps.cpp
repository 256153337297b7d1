#include "doctest.h"

#include <cmath>
#include <complex>

#include "turnover/cusps.hpp"
#include "turnover/words.hpp"

using namespace turnover;

namespace {

Scalar q(long n, long d = 1) { return Scalar::exact(n, d); }

double spectrum_product_error(const CuspVerdict& v) {
    return std::abs(v.eigenvalue_product - 1.0);
}

} // namespace

TEST_CASE("unipotency degrees of cusp translations") {
    // nonzero translations square to nonzero and cube to zero
    for (auto [x, y] : {std::pair{q(1), q(0)}, {q(3), q(-2)}, {q(1, 2), q(5)}}) {
        SquareMatrix m = cusp_translation(x, y);
        CHECK(unipotency_degree(m) == 3);
    }
    CHECK(unipotency_degree(SquareMatrix::identity(4, Backend::exact)) == 1);
    CHECK(unipotency_degree(turnover_rotation(3, 1)) == -1);
    SquareMatrix mf = cusp_translation(Scalar::floating(1.0), Scalar::floating(0.0));
    CHECK(unipotency_degree(mf, 1e-12) == 3);
    CHECK_THROWS_AS(unipotency_degree(mf), config_error);
    CHECK_THROWS_AS(unipotency_degree(cusp_translation(q(1), q(0)), 1e-12), config_error);
}

TEST_CASE("the cusped holonomy classifies as a hyperbolic cusp") {
    Representation rho = hyperbolic_cusp_holonomy(TurnoverPresentation(3, 3, 3));
    CuspVerdict v = classify_end(rho);
    CHECK(v.kind == EndKind::hyperbolic_cusp);
    CHECK(v.unipotency == 3);
    CHECK(std::string(end_kind_name(v.kind)) == "hyperbolic-cusp");
    // floating path: the slice at the origin is the same representation
    CuspVerdict vf = classify_end(slice_representation(0.0, 0.0));
    CHECK(vf.kind == EndKind::hyperbolic_cusp);
    CHECK(vf.unipotency == 3);
}

TEST_CASE("slice points away from the origin are diagonalizable") {
    CuspVerdict v = classify_end(slice_representation(0.2, 0.1));
    CHECK(v.kind == EndKind::diagonalizable_positive);
    CHECK(v.unipotency == -1);
    CHECK(spectrum_product_error(v) < 1e-9);
    REQUIRE(v.eigenframe.size() == 4);
    bool has_unit = false;
    for (const auto& p : v.eigenframe) has_unit = has_unit || std::abs(p.value - 1.0) < 1e-7;
    CHECK(has_unit);
    CHECK_FALSE(v.near_degenerate);
}

TEST_CASE("dichotomy across a slice grid") {
    for (double u : {-0.7, -0.2, 0.0, 0.3, 0.7})
        for (double v : {-0.6, 0.0, 0.4, 0.7}) {
            CuspVerdict verdict = classify_end(slice_representation(u, v));
            if (u == 0.0 && v == 0.0) {
                CHECK(verdict.kind == EndKind::hyperbolic_cusp);
            } else {
                CHECK(verdict.kind == EndKind::diagonalizable_positive);
                CHECK(spectrum_product_error(verdict) < 1e-9);
            }
        }
}

TEST_CASE("degenerate angles stay diagonalizable but carry the flag") {
    // (u, v) = (0, t) doubles the unit eigenvalue
    CuspVerdict v = classify_end(slice_representation(0.0, 0.35));
    CHECK(v.kind == EndKind::diagonalizable_positive);
    CHECK(v.near_degenerate);
}

TEST_CASE("rotation blocks classify as other") {
    Representation iso = isolated_block_representation({1, 1, 1, 1});
    CuspVerdict v = classify_end(iso);
    CHECK(v.kind == EndKind::other);
    CHECK(v.unipotency == -1);
    CHECK(v.detail == "complex spectrum");
}

TEST_CASE("diagonal representations classify as diagonalizable") {
    Representation rho = diagonal_representation(q(2), q(1), q(1, 2));
    CuspVerdict v = classify_end(rho);
    CHECK(v.kind == EndKind::diagonalizable_positive);
    CHECK(v.near_degenerate); // eigenvalue 1 repeats
    Representation neg = diagonal_representation(q(-1), q(-1), q(1));
    CuspVerdict vn = classify_end(neg);
    CHECK(vn.kind == EndKind::other);
    CHECK(vn.detail == "spectrum not positive");
}

TEST_CASE("reference frame construction") {
    EigenFrame f = reference_eigenframe(0.1, 0.0);
    CHECK(f.points[0] == std::vector<double>{1.0, 0.0, 0.0, 0.0});
    CHECK(f.points[1][0] == doctest::Approx(1.0));
    CHECK(f.points[1][1] == doctest::Approx(0.2));
    CHECK(f.points[1][2] == doctest::Approx(0.0));
    CHECK(f.points[1][3] == doctest::Approx(0.02));
    // the rotation relation holds by construction, bit for bit
    SquareMatrix third = similarity(1.0, 2.0 * M_PI / 3.0);
    for (int i = 0; i < 4; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 4; ++j)
            acc += third.at(i, j).float_value() * f.points[1][static_cast<size_t>(j)];
        CHECK(acc == f.points[2][static_cast<size_t>(i)]);
    }
    CHECK_THROWS_AS(reference_eigenframe(0.0, 0.0), domain_error);
    CHECK_THROWS_AS(reference_eigenframe(-1.0, 0.0), domain_error);
}

TEST_CASE("the frame diagonalizes the slice across angles") {
    for (auto [t, theta] : {std::pair{0.05, 0.0},
                            {0.3, 0.0},
                            {0.05, M_PI / 6.0},
                            {0.2, 0.4},
                            {0.5, 1.1}}) {
        FrameReport rep = check_frame_against_slice(t, theta, 1e-6);
        CHECK(rep.pass);
        for (double d : rep.line_deviations) CHECK(d < 1e-10);
        for (double d : rep.permutation_deviations) CHECK(d < 1e-10);
        CHECK(std::abs(rep.frame_determinant) > 1e-6);
        for (double r : rep.eigenspace_residuals) {
            CHECK(r >= 0.0);
            CHECK(r < 1e-5);
        }
    }
}

TEST_CASE("frame reports failure without throwing") {
    // an impossible tolerance flips pass off but the data stays
    FrameReport rep = check_frame_against_slice(0.05, 0.0, 1e-18);
    CHECK_FALSE(rep.pass);
    CHECK(rep.line_deviations[1] > 0.0);
}

TEST_CASE("faithfulness obstructions") {
    Representation hyp = hyperbolic_cusp_holonomy(TurnoverPresentation(3, 3, 3));
    CHECK_FALSE(faithfulness_obstruction(hyp).obstructed);

    FaithfulnessVerdict red = faithfulness_obstruction(diagonal_representation(q(1), q(1), q(1)));
    CHECK(red.obstructed);
    CHECK(red.witness == "a^2 b maps to the identity");

    FaithfulnessVerdict iso = faithfulness_obstruction(isolated_block_representation({1, 1, 1, 1}));
    CHECK(iso.obstructed);
    CHECK(iso.witness == "(a^2 b)^3 maps to the identity");

    FaithfulnessVerdict triv = faithfulness_obstruction(isolated_block_representation({0, 0, 0, 0}));
    CHECK(triv.obstructed);
    CHECK(triv.witness == "a maps to the identity");

    // every frozen class is obstructed
    IsolatedEnumeration e = enumerate_isolated_points();
    for (const auto& cls : e.classes) CHECK(faithfulness_obstruction(cls.rep).obstructed);

    // floating backend needs a tolerance
    CHECK_THROWS_AS(faithfulness_obstruction(slice_representation(0.0, 0.0)), config_error);
    CHECK_FALSE(faithfulness_obstruction(slice_representation(0.0, 0.0), 1e-9).obstructed);
}
