#include "doctest.h"

#include <cmath>

#include "turnover/characters.hpp"
#include "turnover/representation.hpp"

using namespace turnover;

namespace {

Scalar q(long n, long d = 1) { return Scalar::exact(n, d); }

std::array<Scalar, 3> exact_traces(long n1, long d1, long n2, long d2, long n3, long d3) {
    return diagonal_to_traces(q(n1, d1), q(n2, d2), q(n3, d3));
}

} // namespace

TEST_CASE("surface polynomial values") {
    CHECK(surface_polynomial(q(3), q(3), q(3)).is_zero());
    CHECK(surface_polynomial(q(7, 2), q(7, 2), q(5)).is_zero());
    CHECK(surface_polynomial(q(0), q(0), q(0)) == q(9));
    CHECK(surface_polynomial(q(-1), q(-1), q(-1)).is_zero());
    double p = surface_polynomial(Scalar::floating(3.0), Scalar::floating(3.0),
                                  Scalar::floating(3.0))
                   .float_value();
    CHECK(p == 0.0);
    CHECK_THROWS_AS(surface_polynomial(q(1), Scalar::floating(1.0), q(1)), backend_mismatch);
}

TEST_CASE("surface gradient vanishes only at the branch character") {
    auto g0 = surface_gradient(q(3), q(3), q(3));
    CHECK(g0[0].is_zero());
    CHECK(g0[1].is_zero());
    CHECK(g0[2].is_zero());
    auto g1 = surface_gradient(q(7, 2), q(7, 2), q(5));
    CHECK_FALSE(g1[0].is_zero());
    auto g2 = surface_gradient(q(-1), q(-1), q(-1));
    CHECK_FALSE(g2[0].is_zero());
    CHECK(g2[2].is_zero());
}

TEST_CASE("trace coordinates of diagonal representations") {
    TraceCoordinates t = trace_coordinates(diagonal_representation(q(1), q(1), q(1)));
    CHECK(t.source == TraceSource::sl3_block);
    CHECK(t.r == q(3));
    CHECK(t.s == q(3));
    CHECK(t.tau == q(3));
    for (const Scalar* aux : {&t.x, &t.y, &t.z, &t.u, &t.v, &t.w}) CHECK(aux->is_zero());

    TraceCoordinates d = trace_coordinates(diagonal_representation(q(2), q(1), q(1, 2)));
    CHECK(d.r == q(7, 2));
    CHECK(d.s == q(7, 2));
    CHECK(d.tau == q(5));

    TraceCoordinates n = trace_coordinates(diagonal_representation(q(-1), q(-1), q(1)));
    CHECK(n.r == q(-1));
    CHECK(n.s == q(-1));
    CHECK(n.tau == q(-1));
    CHECK(classify_component(n.r, n.s, n.tau) == ComponentLabel::s2);
}

TEST_CASE("trace coordinates agree with the closed form") {
    for (auto [a, b] : {std::pair{q(2), q(3)}, {q(-1), q(-1)}, {q(1, 3), q(5, 2)}}) {
        Scalar c = q(1) / (a * b);
        auto [r, s, tau] = diagonal_to_traces(a, b, c);
        TraceCoordinates t = trace_coordinates(diagonal_representation(a, b, c));
        CHECK(t.r == r);
        CHECK(t.s == s);
        CHECK(t.tau == tau);
        CHECK(surface_polynomial(r, s, tau).is_zero());
    }
}

TEST_CASE("trace coordinates through a fixed vector") {
    // the cusped holonomy fixes the first basis vector but has no 3+1 split
    Representation rho = hyperbolic_cusp_holonomy(TurnoverPresentation(3, 3, 3));
    TraceCoordinates t = trace_coordinates(rho);
    CHECK(t.source == TraceSource::sl4_minus_one);
    CHECK(t.r == q(3));
    CHECK(t.s == q(3));
    CHECK(t.tau == q(3));

    Representation fl = slice_representation(0.0, 0.0);
    TraceCoordinates tf = trace_coordinates(fl, 1e-9);
    CHECK(tf.source == TraceSource::sl4_minus_one);
    CHECK(std::abs(tf.r.float_value() - 3.0) < 1e-12);
    CHECK(std::abs(tf.s.float_value() - 3.0) < 1e-12);
    CHECK(std::abs(tf.tau.float_value() - 3.0) < 1e-12);

    // paired rotation blocks fix nothing and keep no 3+1 split
    Representation iso = isolated_block_representation({1, 1, 1, 1});
    CHECK_THROWS_AS(trace_coordinates(iso), unsupported_reduction);
}

TEST_CASE("tau roots pair up across the quadratic") {
    Scalar a = q(2), b = q(3), c = q(1) / (a * b);
    auto [r, s, tau] = diagonal_to_traces(a, b, c);
    // the opposite cyclic convention gives the conjugate root
    Scalar tau2 = a / b + b / c + c / a;
    CHECK(tau + tau2 == r * s - q(3));
    CHECK(tau * tau2 == r * r * r + s * s * s - q(6) * r * s + q(9));
}

TEST_CASE("closed form rejects bad products and mixed tolerances") {
    CHECK_THROWS_AS(diagonal_to_traces(q(2), q(1), q(1)), domain_error);
    CHECK_THROWS_AS(diagonal_to_traces(q(2), q(1), q(1, 2), 1e-9), config_error);
    auto t = diagonal_to_traces(Scalar::floating(2.0), Scalar::floating(1.0),
                                Scalar::floating(0.5), 1e-12);
    CHECK(t[0].float_value() == doctest::Approx(3.5).epsilon(1e-14));
    CHECK(t[2].float_value() == doctest::Approx(5.0).epsilon(1e-14));
    CHECK_THROWS_AS(diagonal_to_traces(Scalar::floating(2.0), Scalar::floating(1.0),
                                       Scalar::floating(0.5)),
                    config_error);
}

TEST_CASE("component classification") {
    CHECK(classify_component(q(3), q(3), q(3)) == ComponentLabel::s1);
    CHECK(classify_component(q(7, 2), q(7, 2), q(5)) == ComponentLabel::s1);
    CHECK(classify_component(q(-1), q(-1), q(-1)) == ComponentLabel::s2);
    CHECK(classify_component(q(0), q(0), q(0)) == ComponentLabel::off_surface);
    CHECK(classify_component(Scalar::floating(3.0), Scalar::floating(3.0),
                             Scalar::floating(3.0), 1e-9) == ComponentLabel::s1);
    CHECK_THROWS_AS(classify_component(q(3), q(3), q(3), 1e-9), config_error);
    CHECK_THROWS_AS(classify_component(Scalar::floating(3.0), Scalar::floating(3.0),
                                       Scalar::floating(3.0)),
                    config_error);
    CHECK(std::string(component_name(ComponentLabel::s1)) == "S1");
    CHECK(std::string(component_name(ComponentLabel::off_surface)) == "off-surface");
}

TEST_CASE("cyclic canonical form picks the least rotation") {
    auto c0 = cyclic_canonical_form(q(1), q(1), q(1));
    CHECK(c0 == std::array<Scalar, 3>{q(1), q(1), q(1)});
    auto c1 = cyclic_canonical_form(q(2), q(1), q(1, 2));
    CHECK(c1 == std::array<Scalar, 3>{q(1, 2), q(2), q(1)});
    // free orbit of size three collapses to one form
    auto r0 = cyclic_canonical_form(q(-1), q(-1), q(1));
    auto r1 = cyclic_canonical_form(q(1), q(-1), q(-1));
    auto r2 = cyclic_canonical_form(q(-1), q(1), q(-1));
    CHECK(r0 == r1);
    CHECK(r1 == r2);
    CHECK(r0 == std::array<Scalar, 3>{q(-1), q(-1), q(1)});
}

TEST_CASE("rotating the triple leaves the traces alone") {
    Scalar a = q(1, 3), b = q(5, 2), c = q(1) / (a * b);
    auto t0 = diagonal_to_traces(a, b, c);
    auto t1 = diagonal_to_traces(c, a, b);
    auto t2 = diagonal_to_traces(b, c, a);
    for (int i = 0; i < 3; ++i) {
        CHECK(t0[i] == t1[i]);
        CHECK(t0[i] == t2[i]);
    }
    // an odd permutation lands on the conjugate tau root instead
    auto swapped = diagonal_to_traces(b, a, c);
    CHECK(swapped[0] == t0[0]);
    CHECK(swapped[1] == t0[1]);
    CHECK(swapped[2] != t0[2]);
}

TEST_CASE("linear grids") {
    auto g = linear_grid(q(1, 4), q(4), 4);
    REQUIRE(g.size() == 4);
    CHECK(g[0] == q(1, 4));
    CHECK(g[1] == q(3, 2));
    CHECK(g[2] == q(11, 4));
    CHECK(g[3] == q(4));
    CHECK(linear_grid(q(2), q(2), 1).size() == 1);
    CHECK_THROWS_AS(linear_grid(q(0), q(1), 0), domain_error);
}

TEST_CASE("positive grids sample the first component exactly") {
    SurfaceGrid grid;
    grid.x1_values = linear_grid(q(1, 4), q(4), 5);
    grid.x2_values = grid.x1_values;
    auto samples = sample_surface(grid);
    REQUIRE(samples.size() == 25);
    for (const auto& sm : samples) {
        CHECK(sm.point.residual.is_zero());
        CHECK(sm.point.component == ComponentLabel::s1);
        CHECK((sm.triple[0] * sm.triple[1] * sm.triple[2]) == q(1));
    }
    // row-major order: the first row sweeps x2
    CHECK(samples[0].triple[0] == q(1, 4));
    CHECK(samples[1].triple[0] == q(1, 4));
    CHECK(samples[1].triple[1] != samples[0].triple[1]);
}

TEST_CASE("mixed sign grids sample the second component") {
    SurfaceGrid grid;
    grid.x1_values = linear_grid(q(1, 4), q(4), 5);
    grid.x2_values = grid.x1_values;
    grid.sign1 = -1;
    grid.sign2 = -1;
    auto samples = sample_surface(grid);
    for (const auto& sm : samples) {
        CHECK(sm.point.residual.is_zero());
        CHECK(sm.point.component == ComponentLabel::s2);
    }
    SurfaceGrid bad;
    bad.x1_values = {q(0), q(1)};
    bad.x2_values = {q(1)};
    CHECK_THROWS_AS(sample_surface(bad), domain_error);
}

TEST_CASE("singular locus flags exactly the branch point on a grid") {
    SurfaceGrid grid;
    grid.x1_values = {q(1, 2), q(1), q(2)};
    grid.x2_values = grid.x1_values;
    auto samples = sample_surface(grid);
    std::vector<SurfacePoint> pts;
    for (const auto& sm : samples) pts.push_back(sm.point);
    SingularLocusReport rep = singular_locus_check(pts, 1e-8, 1e-8);
    CHECK(rep.flagged_count == 1);
    CHECK(rep.flagged_only_near_center);
    CHECK(rep.center_samples_flagged);
    // the flagged sample is the (1,1,1) cell
    REQUIRE(rep.flagged.size() == 9);
    CHECK(rep.flagged[4] == 1);
}
