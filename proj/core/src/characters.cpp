#include "turnover/characters.hpp"

#include <cmath>
#include <string>

#include "turnover/linalg.hpp"

namespace turnover {

namespace {

void require_tol(const std::optional<double>& tol, const char* what) {
    if (!tol)
        throw config_error(std::string(what) + ": floating backend needs an explicit tol");
    if (!(*tol >= 0.0)) throw config_error(std::string(what) + ": tol must be nonnegative");
}

void reject_tol(const std::optional<double>& tol, const char* what) {
    if (tol) throw config_error(std::string(what) + ": exact backend takes no tol");
}

Scalar constant(long n, Backend bk) {
    return bk == Backend::exact ? Scalar::exact(n, 1) : Scalar::floating(static_cast<double>(n));
}

Backend common_backend(std::initializer_list<const Scalar*> xs, const char* what) {
    Backend bk = (*xs.begin())->backend();
    for (const Scalar* x : xs)
        if (x->backend() != bk)
            throw backend_mismatch(std::string(what) + ": mixed scalar backends");
    return bk;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
    if (a.backend() != b.backend())
        throw backend_mismatch("cyclic_canonical_form: mixed scalar backends");
    if (a.is_exact()) return a.exact_value() < b.exact_value();
    return a.float_value() < b.float_value();
}

bool triple_less(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
    for (int i = 0; i < 3; ++i) {
        if (scalar_less(a[i], b[i])) return true;
        if (scalar_less(b[i], a[i])) return false;
    }
    return false;
}

bool preserves_3plus1(const SquareMatrix& g, const std::optional<double>& tol) {
    if (g.is_exact()) {
        for (int i = 0; i < 3; ++i)
            if (!g.at(3, i).exact_value().is_zero() || !g.at(i, 3).exact_value().is_zero())
                return false;
        return g.at(3, 3).exact_value().is_one();
    }
    for (int i = 0; i < 3; ++i)
        if (std::abs(g.at(3, i).float_value()) > *tol || std::abs(g.at(i, 3).float_value()) > *tol)
            return false;
    return std::abs(g.at(3, 3).float_value() - 1.0) <= *tol;
}

Scalar block_trace3(const SquareMatrix& g) { return g.at(0, 0) + g.at(1, 1) + g.at(2, 2); }

} // namespace

const char* component_name(ComponentLabel c) {
    switch (c) {
    case ComponentLabel::s1: return "S1";
    case ComponentLabel::s2: return "S2";
    case ComponentLabel::off_surface: return "off-surface";
    }
    throw internal_error("component_name: bad label");
}

Scalar surface_polynomial(const Scalar& r, const Scalar& s, const Scalar& tau) {
    Backend bk = common_backend({&r, &s, &tau}, "surface_polynomial");
    Scalar c3 = constant(3, bk), c6 = constant(6, bk), c9 = constant(9, bk);
    return tau * tau - (r * s - c3) * tau + r * r * r + s * s * s - c6 * r * s + c9;
}

std::array<Scalar, 3> surface_gradient(const Scalar& r, const Scalar& s, const Scalar& tau) {
    Backend bk = common_backend({&r, &s, &tau}, "surface_gradient");
    Scalar c2 = constant(2, bk), c3 = constant(3, bk), c6 = constant(6, bk);
    return {c3 * r * r - s * tau - c6 * s, c3 * s * s - r * tau - c6 * r,
            c2 * tau - r * s + c3};
}

TraceCoordinates trace_coordinates(const Representation& rho, std::optional<double> tol) {
    if (rho.dimension() != 4)
        throw dimension_error("trace_coordinates: expected 4x4 images");
    bool exact = rho.backend() == Backend::exact;
    if (exact)
        reject_tol(tol, "trace_coordinates");
    else
        require_tol(tol, "trace_coordinates");

    const char* words[9] = {"a", "b", "ab", "A", "B", "BA", "aB", "Ab", "abAB"};
    TraceCoordinates out;
    Scalar* slots[9] = {&out.x, &out.y, &out.z, &out.u, &out.v,
                        &out.w, &out.r, &out.s, &out.tau};

    if (preserves_3plus1(rho.image_a(), tol) && preserves_3plus1(rho.image_b(), tol)) {
        out.source = TraceSource::sl3_block;
        for (int i = 0; i < 9; ++i) *slots[i] = block_trace3(rho.evaluate(words[i]));
        return out;
    }

    SquareMatrix id = SquareMatrix::identity(4, rho.backend());
    LinearSubspace fixed =
        joint_kernel({rho.image_a() - id, rho.image_b() - id}, exact ? std::nullopt : tol);
    if (fixed.rank() >= 1) {
        out.source = TraceSource::sl4_minus_one;
        Scalar one = constant(1, rho.backend());
        for (int i = 0; i < 9; ++i) *slots[i] = rho.evaluate(words[i]).trace() - one;
        return out;
    }
    throw unsupported_reduction(
        "trace_coordinates: images neither preserve a 3+1 split nor fix a vector; "
        "take raw word traces via evaluate() instead");
}

std::array<Scalar, 3> diagonal_to_traces(const Scalar& x1, const Scalar& x2, const Scalar& x3,
                                         std::optional<double> tol) {
    Backend bk = common_backend({&x1, &x2, &x3}, "diagonal_to_traces");
    Scalar prod = x1 * x2 * x3;
    Scalar one = constant(1, bk);
    if (bk == Backend::exact) {
        reject_tol(tol, "diagonal_to_traces");
        if (!(prod - one).is_zero()) throw domain_error("diagonal_to_traces: product must be 1");
    } else {
        require_tol(tol, "diagonal_to_traces");
        if (std::abs(prod.float_value() - 1.0) > *tol)
            throw domain_error("diagonal_to_traces: product must be 1");
    }
    Scalar r = x1 * x2 + x2 * x3 + x3 * x1;
    Scalar s = x1 + x2 + x3;
    Scalar tau = x2 / x1 + x3 / x2 + x1 / x3;
    return {r, s, tau};
}

ComponentLabel classify_component(const Scalar& r, const Scalar& s, const Scalar& tau,
                                  std::optional<double> tol) {
    Backend bk = common_backend({&r, &s, &tau}, "classify_component");
    Scalar p = surface_polynomial(r, s, tau);
    if (bk == Backend::exact) {
        reject_tol(tol, "classify_component");
        if (!p.is_zero()) return ComponentLabel::off_surface;
        QuadExt three(3);
        bool s1 = r.exact_value() >= three && s.exact_value() >= three;
        return s1 ? ComponentLabel::s1 : ComponentLabel::s2;
    }
    require_tol(tol, "classify_component");
    if (std::abs(p.float_value()) > *tol) return ComponentLabel::off_surface;
    bool s1 = r.float_value() >= 3.0 - *tol && s.float_value() >= 3.0 - *tol;
    return s1 ? ComponentLabel::s1 : ComponentLabel::s2;
}

std::array<Scalar, 3> cyclic_canonical_form(const Scalar& x1, const Scalar& x2,
                                            const Scalar& x3) {
    common_backend({&x1, &x2, &x3}, "cyclic_canonical_form");
    std::array<Scalar, 3> best{x1, x2, x3};
    std::array<Scalar, 3> rot1{x3, x1, x2};
    std::array<Scalar, 3> rot2{x2, x3, x1};
    if (triple_less(rot1, best)) best = rot1;
    if (triple_less(rot2, best)) best = rot2;
    return best;
}

SurfacePoint surface_point(const Scalar& r, const Scalar& s, const Scalar& tau,
                           std::optional<double> tol) {
    SurfacePoint pt;
    pt.r = r;
    pt.s = s;
    pt.tau = tau;
    pt.residual = surface_polynomial(r, s, tau);
    pt.component = classify_component(r, s, tau, tol);
    pt.gradient = surface_gradient(r, s, tau);
    return pt;
}

std::vector<Scalar> linear_grid(const Scalar& lo, const Scalar& hi, int count) {
    if (count < 1) throw domain_error("linear_grid: count must be positive");
    Backend bk = common_backend({&lo, &hi}, "linear_grid");
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(count));
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    Scalar span = hi - lo;
    Scalar denom = constant(count - 1, bk);
    for (int k = 0; k < count; ++k)
        out.push_back(lo + span * constant(k, bk) / denom);
    return out;
}

std::vector<SurfaceSample> sample_surface(const SurfaceGrid& grid, std::optional<double> tol) {
    if (grid.x1_values.empty() || grid.x2_values.empty())
        throw domain_error("sample_surface: empty grid");
    if (std::abs(grid.sign1) != 1 || std::abs(grid.sign2) != 1)
        throw domain_error("sample_surface: signs must be +1 or -1");
    std::vector<SurfaceSample> out;
    out.reserve(grid.x1_values.size() * grid.x2_values.size());
    for (const Scalar& raw1 : grid.x1_values)
        for (const Scalar& raw2 : grid.x2_values) {
            Backend bk = common_backend({&raw1, &raw2}, "sample_surface");
            Scalar x1 = grid.sign1 < 0 ? -raw1 : raw1;
            Scalar x2 = grid.sign2 < 0 ? -raw2 : raw2;
            bool zero = bk == Backend::exact
                            ? (x1.is_zero() || x2.is_zero())
                            : (x1.float_value() == 0.0 || x2.float_value() == 0.0);
            if (zero) throw domain_error("sample_surface: grid hits a zero of x1 x2");
            Scalar x3 = constant(1, bk) / (x1 * x2);
            SurfaceSample sample;
            sample.triple = {x1, x2, x3};
            sample.canonical = cyclic_canonical_form(x1, x2, x3);
            auto [r, s, tau] = diagonal_to_traces(x1, x2, x3, tol);
            sample.point = surface_point(r, s, tau, tol);
            out.push_back(std::move(sample));
        }
    return out;
}

SingularLocusReport singular_locus_check(const std::vector<SurfacePoint>& samples,
                                         double grad_tol, double radius) {
    SingularLocusReport rep;
    rep.gradient_norms.reserve(samples.size());
    rep.flagged.reserve(samples.size());
    for (const SurfacePoint& pt : samples) {
        double g0 = pt.gradient[0].to_double();
        double g1 = pt.gradient[1].to_double();
        double g2 = pt.gradient[2].to_double();
        double norm = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2);
        bool flag = norm <= grad_tol;
        double dist = std::max({std::abs(pt.r.to_double() - 3.0),
                                std::abs(pt.s.to_double() - 3.0),
                                std::abs(pt.tau.to_double() - 3.0)});
        rep.gradient_norms.push_back(norm);
        rep.flagged.push_back(flag ? 1 : 0);
        if (flag) {
            ++rep.flagged_count;
            if (dist > radius) rep.flagged_only_near_center = false;
        }
        if (dist == 0.0 && !flag) rep.center_samples_flagged = false;
    }
    return rep;
}

} // namespace turnover
