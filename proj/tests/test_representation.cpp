#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "turnover/representation.hpp"

using namespace turnover;

TEST_CASE("cusp translations compose additively") {
    auto g = testing::rng(401);
    for (int trial = 0; trial < 10; ++trial) {
        Scalar x1(QuadExt(testing::random_rational(g))), y1(QuadExt(testing::random_rational(g)));
        Scalar x2(QuadExt(testing::random_rational(g))), y2(QuadExt(testing::random_rational(g)));
        SquareMatrix lhs = cusp_translation(x1, y1) * cusp_translation(x2, y2);
        SquareMatrix rhs = cusp_translation(x1 + x2, y1 + y2);
        CHECK(lhs.exact_equals(rhs));
    }
    CHECK(cusp_translation(Scalar(1), Scalar(0)).at(0, 3) == Scalar::exact(1, 2));
}

TEST_CASE("turnover rotation has the stated order, exactly") {
    for (int n : {1, 2, 3, 4, 6}) {
        SquareMatrix r = turnover_rotation(n, 1);
        CHECK(r.pow(n).exact_equals(SquareMatrix::identity(4, Backend::exact)));
        if (n > 1)
            CHECK_FALSE(r.exact_equals(SquareMatrix::identity(4, Backend::exact)));
        CHECK(r.determinant().exact_value().is_one());
    }
    CHECK_THROWS_AS(turnover_rotation(5, 1), domain_error);
    // Reducible fractions fall back to supported orders: 2/6 = 1/3.
    CHECK(turnover_rotation(6, 2).exact_equals(turnover_rotation(3, 1)));
}

TEST_CASE("similarity conjugates translations by rotation and scale") {
    SquareMatrix om = similarity(1.0, 2.0 * M_PI / 3.0);
    CHECK(om.max_abs_diff(turnover_rotation(3, 1).to_float()) < 1e-15);
    CHECK_THROWS_AS(similarity(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(similarity(-2.0, 1.0), domain_error);
}

TEST_CASE("unimodular embeddings reject bad blocks") {
    SquareMatrix two = SquareMatrix::identity(3, Backend::exact).scaled(Scalar(2));
    CHECK_THROWS_AS(include_sl3(two), determinant_error);
    SquareMatrix s2 = SquareMatrix::from_rows({{1, 1}, {0, 1}});
    SquareMatrix bad = SquareMatrix::from_rows({{2, 0}, {0, 1}});
    CHECK_THROWS_AS(include_sl2_pair(s2, bad), determinant_error);
    SquareMatrix e = include_sl2_pair(s2, s2.inverse());
    CHECK(e.determinant().exact_value().is_one());
}

TEST_CASE("euclidean holonomy satisfies all relators exactly") {
    for (auto [n1, n2, n3] : {std::array{3, 3, 3}, {2, 3, 6}, {2, 4, 4}, {6, 3, 2}, {4, 2, 4}}) {
        TurnoverPresentation p(n1, n2, n3);
        Representation rho = hyperbolic_cusp_holonomy(p);
        RelationReport rep = verify_relations(rho);
        CHECK(rep.pass);
        for (double d : rep.deviations) CHECK(d == 0.0);
        CHECK(rho.backend() == Backend::exact);
    }
    CHECK_THROWS_AS(hyperbolic_cusp_holonomy(TurnoverPresentation(2, 3, 7)), domain_error);
}

TEST_CASE("the reference holonomy matches its pinned generator images") {
    Representation rho = hyperbolic_cusp_holonomy(TurnoverPresentation(3, 3, 3));
    CHECK(rho.image_a().exact_equals(turnover_rotation(3, 1)));
    CHECK(rho.image_b().exact_equals(turnover_rotation(3, 1) *
                                     cusp_translation(Scalar(1), Scalar(0))));
    // a^2 b evaluates to the unit cusp translation.
    CHECK(rho.evaluate("aab").exact_equals(cusp_translation(Scalar(1), Scalar(0))));
}

TEST_CASE("word evaluation respects inverses") {
    Representation rho = hyperbolic_cusp_holonomy(TurnoverPresentation(3, 3, 3));
    SquareMatrix lhs = rho.evaluate("abAB");
    SquareMatrix rhs = rho.image_a() * rho.image_b() * rho.image_a().inverse() *
                       rho.image_b().inverse();
    CHECK(lhs.exact_equals(rhs));
    CHECK(rho.evaluate(Word()).exact_equals(SquareMatrix::identity(4, Backend::exact)));
}

TEST_CASE("slice representation hits the holonomy at the origin") {
    Representation rho = slice_representation(0.0, 0.0);
    Representation ref = hyperbolic_cusp_holonomy(TurnoverPresentation(3, 3, 3));
    CHECK(rho.image_a().max_abs_diff(ref.image_a().to_float()) < 1e-15);
    CHECK(rho.image_b().max_abs_diff(ref.image_b().to_float()) == 0.0);
    // evaluate("aab") multiplies three rotation copies, so the irrational
    // entries of the rotation cost one ulp against the exact translation.
    CHECK(rho.evaluate("aab").max_abs_diff(
              cusp_translation(Scalar::floating(1.0), Scalar::floating(0.0))) < 1e-15);
}

TEST_CASE("slice representations satisfy the relators across a grid") {
    for (double u : {-0.4, -0.1, 0.0, 0.2, 0.5})
        for (double v : {-0.5, 0.0, 0.3}) {
            Representation rho = slice_representation(u, v);
            RelationReport rep = verify_relations(rho, 1e-9);
            CHECK(rep.pass);
        }
}

TEST_CASE("slice eigenvalue structure: product of nonunit eigenvalues is 1") {
    for (auto [t, s] : {std::pair{0.3, 0.25}, {0.45, 1.1}, {0.2, -0.7}}) {
        auto [u, v] = polar_slice_parameters(t, s);
        Representation rho = slice_representation(u, v);
        SquareMatrix e = rho.evaluate("aab");
        EigenDecomposition ed = eigen_decomposition(e, 1e-9);
        REQUIRE(ed.real_diagonalizable);
        double prod = 1.0;
        int ones = 0;
        for (const auto& p : ed.pairs) {
            CHECK(p.value > 0.0);
            prod *= p.value;
        }
        CHECK(std::fabs(prod - 1.0) < 1e-9);
        for (const auto& p : ed.pairs)
            if (std::fabs(p.value - 1.0) < 1e-9) ++ones;
        CHECK(ones >= 1);
        // Closed form: eigenvalues exp(2 t cos(s + 2 pi k / 3)) and 1.
        std::vector<double> expected{1.0};
        for (int k = 0; k < 3; ++k)
            expected.push_back(std::exp(2.0 * t * std::cos(s + 2.0 * M_PI * k / 3.0)));
        std::sort(expected.begin(), expected.end(), std::greater<>());
        for (size_t i = 0; i < 4; ++i)
            CHECK(std::fabs(ed.pairs[i].value - expected[i]) < 1e-7);
    }
}

TEST_CASE("diagonal representation demands unit product") {
    CHECK_THROWS_AS(diagonal_representation(Scalar(2), Scalar(1), Scalar(1)), domain_error);
    Representation rho =
        diagonal_representation(Scalar(2), Scalar(1), Scalar::exact(1, 2));
    CHECK(verify_relations(rho).pass);
    SquareMatrix d = rho.evaluate("aab");
    CHECK(d.at(0, 0) == Scalar(2));
    CHECK(d.at(1, 1) == Scalar(1));
    CHECK(d.at(2, 2) == Scalar::exact(1, 2));
    CHECK(d.at(3, 3) == Scalar(1));
    // Floating variant needs its tolerance.
    CHECK_THROWS_AS(diagonal_representation(Scalar::floating(2.0), Scalar::floating(1.0),
                                            Scalar::floating(0.5)),
                    config_error);
    CHECK(verify_relations(diagonal_representation(Scalar::floating(2.0),
                                                   Scalar::floating(1.0),
                                                   Scalar::floating(0.5), 1e-12),
                           1e-12)
              .pass);
}

TEST_CASE("verify_relations tolerance discipline") {
    Representation rho = hyperbolic_cusp_holonomy(TurnoverPresentation(3, 3, 3));
    CHECK_THROWS_AS(verify_relations(rho, 1e-9), config_error);
    Representation rhof = slice_representation(0.1, 0.1);
    CHECK_THROWS_AS(verify_relations(rhof), config_error);
}

TEST_CASE("transversality cocycles match the slice derivatives") {
    auto [d1, d2] = slice_derivative_matrices();
    CHECK(d1.at(0, 1) == Scalar::exact(1, 2));
    CHECK(d1.at(0, 3) == Scalar::exact(1, 6));
    CHECK(d1.at(1, 3) == Scalar::exact(1, 2));
    CHECK(d2.at(0, 2) == Scalar::exact(1, 2));
    CHECK(d2.at(2, 3) == Scalar::exact(1, 2));
    auto [z1c, z2c] = transversality_cocycles();
    SquareMatrix minv = cusp_translation(Scalar(1), Scalar(0)).inverse();
    CHECK(z1c.at_slice_generator.exact_equals(d1 * minv));
    CHECK(z2c.at_slice_generator.exact_equals(d2 * minv));
    CHECK(z1c.at_a.sup_norm() == 0.0);
    // Cocycle values are traceless.
    CHECK(z1c.at_b.trace().exact_value().is_zero());
    CHECK(z2c.at_b.trace().exact_value().is_zero());
}

TEST_CASE("slice derivatives agree with finite differences of the slice map") {
    auto [d1, d2] = slice_derivative_matrices();
    double h = 1e-6;
    SquareMatrix base = slice_representation(0.0, 0.0).evaluate("aab");
    SquareMatrix du = slice_representation(h, 0.0).evaluate("aab");
    SquareMatrix dv = slice_representation(0.0, h).evaluate("aab");
    SquareMatrix fd1 = (du - base).scaled(Scalar::floating(1.0 / h));
    SquareMatrix fd2 = (dv - base).scaled(Scalar::floating(1.0 / h));
    CHECK(fd1.max_abs_diff(d1.to_float()) < 1e-5);
    CHECK(fd2.max_abs_diff(d2.to_float()) < 1e-5);
}

TEST_CASE("degeneration path contracts monotonically to the identity") {
    double prev = -1.0;
    for (double x : {1.0, 0.5, 0.25, 0.1, 1e-3, 1e-6}) {
        SquareMatrix c = degeneration_conjugate(Scalar::floating(x));
        double dist = c.max_abs_diff(SquareMatrix::identity(4, Backend::floating));
        if (prev >= 0.0) CHECK(dist < prev);
        prev = dist;
    }
    CHECK(prev < 1e-5);
    // Exact form: I + x E12 + x E24 + x^2/2 E14.
    SquareMatrix c = degeneration_conjugate(Scalar::exact(1, 4));
    SquareMatrix expected = SquareMatrix::identity(4, Backend::exact);
    expected.set(0, 1, Scalar::exact(1, 4));
    expected.set(1, 3, Scalar::exact(1, 4));
    expected.set(0, 3, Scalar::exact(1, 32));
    CHECK(c.exact_equals(expected));
    CHECK_THROWS_AS(degeneration_conjugate(Scalar(0)), domain_error);
}

TEST_CASE("degeneration conjugator commutes with the rotation image") {
    // diag(x,1,1,1/x) fixes the generator a, so only a^2 b moves.
    Scalar x = Scalar::exact(3, 7);
    SquareMatrix c = SquareMatrix::identity(4, Backend::exact);
    c.set(0, 0, x);
    c.set(3, 3, Scalar(1) / x);
    SquareMatrix om = turnover_rotation(3, 1);
    CHECK((c * om).exact_equals(om * c));
}

TEST_CASE("isolated block representations satisfy the relators") {
    for (auto blocks : {std::array{0, 0, 0, 0}, {1, 2, 1, 2}, {0, 1, 2, 0}, {1, 0, 2, 2}}) {
        Representation rho = isolated_block_representation(blocks);
        CHECK(verify_relations(rho).pass);
        CHECK(rho.evaluate("aab").determinant().exact_value().is_one());
    }
    CHECK_THROWS_AS(isolated_block_representation({0, 0, 0, 3}), domain_error);
}

TEST_CASE("isolated enumeration reproduces the frozen census") {
    IsolatedEnumeration e = enumerate_isolated_points();
    CHECK(e.classes.size() == 24);
    CHECK(e.on_surface_discarded == 1);
    CHECK_FALSE(e.count_matches);
    CHECK(e.expected_count == 19);
    CHECK(e.case_tallies == std::array<int, 4>{6, 6, 9, 3});
    // The trivial representation is the least class and is rigid here.
    CHECK(e.classes[0].blocks == std::array<int, 4>{0, 0, 0, 0});
    CHECK(e.classes[0].case_label == 4);
    CHECK(e.classes[0].a2b_order == 1);
    // Ten trace-equal pairs, all separated only by reflections. The
    // intertwiner space is 8-dimensional when the two generator constraints
    // coincide (either image pair trivial, or the two images equal) and
    // 4-dimensional otherwise.
    CHECK(e.collision_evidence.size() == 10);
    int dim8 = 0, dim4 = 0;
    for (const auto& ev : e.collision_evidence) {
        if (ev.space_dimension == 8) ++dim8;
        if (ev.space_dimension == 4) ++dim4;
        CHECK(ev.reflection_conjugator_found);
        CHECK_FALSE(ev.positive_det_sample_found);
        CHECK(ev.samples == 400);
    }
    CHECK(dim8 == 4);
    CHECK(dim4 == 6);
    int partnered = 0;
    for (const auto& c : e.classes)
        if (c.partner_index >= 0) ++partnered;
    CHECK(partnered == 20);
}

TEST_CASE("isolated enumeration canonical order is deterministic") {
    IsolatedEnumeration e1 = enumerate_isolated_points();
    IsolatedEnumeration e2 = enumerate_isolated_points();
    REQUIRE(e1.classes.size() == e2.classes.size());
    for (size_t i = 0; i < e1.classes.size(); ++i)
        CHECK(e1.classes[i].blocks == e2.classes[i].blocks);
    // First few of the frozen census.
    CHECK(e1.classes[1].blocks == std::array<int, 4>{0, 0, 1, 0});
    CHECK(e1.classes[2].blocks == std::array<int, 4>{0, 0, 1, 1});
    CHECK(e1.classes.back().blocks == std::array<int, 4>{1, 2, 2, 1});
}
