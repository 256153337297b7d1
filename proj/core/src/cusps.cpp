#include "turnover/cusps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dense.hpp"
#include "turnover/words.hpp"

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

std::vector<double> mat_vec(const SquareMatrix& M, const std::vector<double>& v) {
    int n = M.size();
    const auto& e = M.float_entries();
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(i)] += e[static_cast<size_t>(i) * n + j] * v[static_cast<size_t>(j)];
    return out;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// sine of the angle between the vector and the line through p
double line_deviation(const std::vector<double>& image, const std::vector<double>& p) {
    double np = norm2(p), ni = norm2(image);
    if (ni == 0.0) return 0.0; // the zero vector lies on every line
    double dot = 0.0;
    for (size_t i = 0; i < p.size(); ++i) dot += image[i] * p[i];
    double rej = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        double r = image[i] - dot / (np * np) * p[i];
        rej += r * r;
    }
    return std::sqrt(rej) / ni;
}

bool unipotent_generator(const SquareMatrix& g, bool exact, double tol) {
    int deg = unipotency_degree(g, exact ? std::optional<double>{} : std::optional<double>{tol});
    return deg >= 2 && deg <= 3;
}

} // namespace

const char* end_kind_name(EndKind k) {
    switch (k) {
    case EndKind::hyperbolic_cusp: return "hyperbolic-cusp";
    case EndKind::diagonalizable_positive: return "diagonalizable-positive";
    case EndKind::other: return "other";
    }
    throw internal_error("end_kind_name: bad kind");
}

int unipotency_degree(const SquareMatrix& A, std::optional<double> tol) {
    bool exact = A.is_exact();
    if (exact)
        reject_tol(tol, "unipotency_degree");
    else
        require_tol(tol, "unipotency_degree");
    SquareMatrix N = A - SquareMatrix::identity(A.size(), A.backend());
    SquareMatrix P = SquareMatrix::identity(A.size(), A.backend());
    for (int k = 1; k <= A.size(); ++k) {
        P = P * N;
        bool zero = exact ? P.exact_equals(SquareMatrix::zero(A.size(), Backend::exact))
                          : P.sup_norm() <= *tol;
        if (zero) return k;
    }
    return -1;
}

CuspVerdict classify_end(const Representation& rho, double tol, double reality_tol,
                         double degeneracy_gap) {
    CuspVerdict out;
    auto [wa, wb] = gamma0_generators();
    SquareMatrix A = rho.evaluate(wa);
    SquareMatrix B = rho.evaluate(wb);
    bool exact = rho.backend() == Backend::exact;

    out.unipotency =
        unipotency_degree(A, exact ? std::optional<double>{} : std::optional<double>{tol});

    bool commute = exact ? (A * B).exact_equals(B * A)
                         : (A * B).max_abs_diff(B * A) <= tol;
    SquareMatrix af = exact ? A.to_float() : A;
    out.eigenvalue_product = af.determinant().float_value();

    if (unipotent_generator(A, exact, tol) && unipotent_generator(B, exact, tol) && commute) {
        out.kind = EndKind::hyperbolic_cusp;
        EigenDecomposition ed = eigen_decomposition(af, reality_tol);
        out.spectrum = ed.roots;
        out.detail = "translation generators unipotent and commuting";
        return out;
    }

    EigenDecomposition ed = eigen_decomposition(af, reality_tol);
    out.spectrum = ed.roots;

    if (ed.real_diagonalizable) {
        std::vector<double> values;
        for (const auto& p : ed.pairs)
            if (values.empty() || values.back() != p.value) values.push_back(p.value);
        bool repeated = values.size() < ed.pairs.size() || ed.pairs.size() < 4;
        double min_gap = std::numeric_limits<double>::infinity();
        for (size_t i = 1; i < values.size(); ++i)
            min_gap = std::min(min_gap, std::abs(values[i - 1] - values[i]));
        out.near_degenerate = repeated || min_gap < degeneracy_gap;

        bool positive = std::all_of(values.begin(), values.end(), [](double v) { return v > 0.0; });
        bool has_unit = std::any_of(values.begin(), values.end(),
                                    [&](double v) { return std::abs(v - 1.0) <= reality_tol; });
        bool unit_product = std::abs(out.eigenvalue_product - 1.0) <= tol;
        if (positive && has_unit && unit_product) {
            out.kind = EndKind::diagonalizable_positive;
            out.eigenframe = ed.pairs;
            out.detail = "real positive spectrum with unit member and unit product";
            return out;
        }
        out.kind = EndKind::other;
        out.detail = !positive    ? "spectrum not positive"
                     : !has_unit  ? "no unit eigenvalue"
                                  : "eigenvalue product away from one";
        return out;
    }

    out.kind = EndKind::other;
    out.detail = ed.failure_reason.empty() ? "spectral decomposition failed" : ed.failure_reason;
    double min_gap = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < ed.roots.size(); ++i)
        for (size_t j = i + 1; j < ed.roots.size(); ++j)
            min_gap = std::min(min_gap, std::abs(ed.roots[i] - ed.roots[j]));
    out.near_degenerate = min_gap < degeneracy_gap;
    return out;
}

EigenFrame reference_eigenframe(double t, double theta) {
    if (!(t > 0.0)) throw domain_error("reference_eigenframe: t must be positive");
    EigenFrame f;
    f.t = t;
    f.theta = theta;
    f.points[0] = {1.0, 0.0, 0.0, 0.0};
    SquareMatrix rot = similarity(1.0, theta);
    f.points[1] = mat_vec(rot, {1.0, 2.0 * t, 0.0, 2.0 * t * t});
    SquareMatrix third = similarity(1.0, 2.0 * M_PI / 3.0);
    f.points[2] = mat_vec(third, f.points[1]);
    f.points[3] = mat_vec(third, f.points[2]);
    return f;
}

FrameReport check_frame_against_slice(double t, double theta, double tol) {
    FrameReport rep;
    rep.frame = reference_eigenframe(t, theta);
    double u = t * std::cos(3.0 * theta);
    double v = t * std::sin(3.0 * theta);
    Representation rho = slice_representation(u, v);
    SquareMatrix A = rho.evaluate("aab");

    rep.pass = true;
    for (int i = 0; i < 4; ++i) {
        rep.line_deviations[static_cast<size_t>(i)] =
            line_deviation(mat_vec(A, rep.frame.points[static_cast<size_t>(i)]),
                           rep.frame.points[static_cast<size_t>(i)]);
        rep.pass = rep.pass && rep.line_deviations[static_cast<size_t>(i)] < tol;
    }

    SquareMatrix a_img = rho.image_a();
    for (int i = 0; i < 3; ++i) {
        const auto& src = rep.frame.points[static_cast<size_t>(1 + i)];
        const auto& dst = rep.frame.points[static_cast<size_t>(1 + (i + 1) % 3)];
        rep.permutation_deviations[static_cast<size_t>(i)] = line_deviation(mat_vec(a_img, src), dst);
    }

    EigenDecomposition ed = eigen_decomposition(A, 1e-9);
    if (ed.real_diagonalizable) {
        // group eigenvectors by their clustered value
        std::vector<std::pair<double, std::vector<std::vector<double>>>> spaces;
        for (const auto& p : ed.pairs) {
            if (spaces.empty() || spaces.back().first != p.value)
                spaces.push_back({p.value, {}});
            spaces.back().second.push_back(p.vector);
        }
        for (int i = 0; i < 4; ++i) {
            std::vector<double> p = rep.frame.points[static_cast<size_t>(i)];
            double n = norm2(p);
            for (double& x : p) x /= n;
            double best = std::numeric_limits<double>::infinity();
            for (const auto& sp : spaces)
                best = std::min(best, detail::span_residual(sp.second, p));
            rep.eigenspace_residuals[static_cast<size_t>(i)] = best;
        }
    } else {
        rep.eigenspace_residuals.fill(-1.0);
        rep.note = "spectral decomposition unavailable: " + ed.failure_reason;
    }

    detail::Dense<double> fr(4, 4);
    for (int j = 0; j < 4; ++j) {
        double n = norm2(rep.frame.points[static_cast<size_t>(j)]);
        for (int i = 0; i < 4; ++i) fr(i, j) = rep.frame.points[static_cast<size_t>(j)][static_cast<size_t>(i)] / n;
    }
    std::vector<double> flat = fr.a;
    rep.frame_determinant =
        SquareMatrix::from_float(4, flat).determinant().float_value();
    return rep;
}

FaithfulnessVerdict faithfulness_obstruction(const Representation& rho,
                                             std::optional<double> tol) {
    bool exact = rho.backend() == Backend::exact;
    if (exact)
        reject_tol(tol, "faithfulness_obstruction");
    else
        require_tol(tol, "faithfulness_obstruction");
    auto is_id = [&](const SquareMatrix& g) {
        return exact ? g.is_identity() : g.is_identity(*tol);
    };
    FaithfulnessVerdict out;
    if (is_id(rho.image_a())) {
        out.obstructed = true;
        out.witness = "a maps to the identity";
        return out;
    }
    SquareMatrix A = rho.evaluate("aab");
    SquareMatrix P = SquareMatrix::identity(rho.dimension(), rho.backend());
    for (int k = 1; k <= 3; ++k) {
        P = P * A;
        if (is_id(P)) {
            out.obstructed = true;
            out.witness = k == 1 ? "a^2 b maps to the identity"
                                 : "(a^2 b)^" + std::to_string(k) + " maps to the identity";
            return out;
        }
    }
    return out;
}

} // namespace turnover
