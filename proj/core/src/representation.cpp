#include "turnover/representation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "dense.hpp"

namespace turnover {

Representation::Representation(TurnoverPresentation presentation, SquareMatrix image_a,
                               SquareMatrix image_b, FamilyTag family,
                               std::vector<Scalar> parameters)
    : presentation_(presentation),
      image_a_(std::move(image_a)),
      image_b_(std::move(image_b)),
      family_(family),
      parameters_(std::move(parameters)) {
    if (image_a_.size() != image_b_.size())
        throw dimension_error("generator images differ in size");
    if (image_a_.backend() != image_b_.backend())
        throw backend_mismatch("generator images differ in backend");
}

SquareMatrix Representation::evaluate(const Word& w) const {
    SquareMatrix out = SquareMatrix::identity(dimension(), backend());
    std::optional<SquareMatrix> inv_a, inv_b;
    for (char c : w.letters()) {
        switch (c) {
            case 'a': out = out * image_a_; break;
            case 'b': out = out * image_b_; break;
            case 'A':
                if (!inv_a) inv_a = image_a_.inverse();
                out = out * *inv_a;
                break;
            case 'B':
                if (!inv_b) inv_b = image_b_.inverse();
                out = out * *inv_b;
                break;
            default: throw parse_error("invalid letter in word");
        }
    }
    return out;
}

SquareMatrix cusp_translation(const Scalar& x, const Scalar& y) {
    if (x.backend() != y.backend())
        throw backend_mismatch("cusp translation coordinates mix backends");
    Backend bk = x.backend();
    SquareMatrix m = SquareMatrix::identity(4, bk);
    Scalar half = bk == Backend::exact ? Scalar::exact(1, 2) : Scalar::floating(0.5);
    m.set(0, 1, x);
    m.set(0, 2, y);
    m.set(0, 3, (x * x + y * y) * half);
    m.set(1, 3, x);
    m.set(2, 3, y);
    return m;
}

SquareMatrix similarity(double r, double theta) {
    if (!(r > 0.0)) throw domain_error("similarity ratio must be positive");
    SquareMatrix m = SquareMatrix::zero(4, Backend::floating);
    double c = std::cos(theta), s = std::sin(theta);
    m.set(0, 0, Scalar::floating(r));
    m.set(1, 1, Scalar::floating(c));
    m.set(1, 2, Scalar::floating(-s));
    m.set(2, 1, Scalar::floating(s));
    m.set(2, 2, Scalar::floating(c));
    m.set(3, 3, Scalar::floating(1.0 / r));
    return m;
}

namespace {

// cos and sin of 2 pi p / q for the crystallographic orders.
std::pair<QuadExt, QuadExt> exact_cos_sin(int q, int p) {
    mpq_class half(1, 2);
    QuadExt s3_half(mpq_class(0), half, 3);
    switch (q) {
        case 1: return {QuadExt(1), QuadExt(0)};
        case 2: return {QuadExt(-1), QuadExt(0)};
        case 3:
            return p == 1 ? std::pair{QuadExt(-half), s3_half}
                          : std::pair{QuadExt(-half), -s3_half};
        case 4:
            return p == 1 ? std::pair{QuadExt(0), QuadExt(1)}
                          : std::pair{QuadExt(0), QuadExt(-1)};
        case 6:
            return p == 1 ? std::pair{QuadExt(half), s3_half}
                          : std::pair{QuadExt(half), -s3_half};
        default:
            throw domain_error("rotation order " + std::to_string(q) +
                               " has no exact quadratic representation");
    }
}

} // namespace

SquareMatrix turnover_rotation(int n, int k) {
    if (n < 1) throw domain_error("rotation order must be positive");
    int m = ((k % n) + n) % n;
    if (m == 0) return SquareMatrix::identity(4, Backend::exact);
    int g = std::gcd(m, n);
    auto [c, s] = exact_cos_sin(n / g, m / g);
    SquareMatrix out = SquareMatrix::identity(4, Backend::exact);
    out.set(1, 1, Scalar(c));
    out.set(1, 2, Scalar(-s));
    out.set(2, 1, Scalar(s));
    out.set(2, 2, Scalar(c));
    return out;
}

SquareMatrix permutation_p3(Backend backend) {
    SquareMatrix p = SquareMatrix::zero(3, backend);
    Scalar one = backend == Backend::exact ? Scalar(1) : Scalar::floating(1.0);
    p.set(0, 1, one);
    p.set(1, 2, one);
    p.set(2, 0, one);
    return p;
}

namespace {

void require_unimodular(const SquareMatrix& m, std::optional<double> tol, const char* what) {
    Scalar det = m.determinant();
    if (m.is_exact()) {
        if (tol) throw config_error(std::string(what) + " on the exact backend takes no tolerance");
        if (!det.exact_value().is_one())
            throw determinant_error(std::string(what) + " requires determinant 1");
    } else {
        if (!tol)
            throw config_error(std::string(what) + " on the floating backend requires a tolerance");
        if (std::fabs(det.float_value() - 1.0) > *tol)
            throw determinant_error(std::string(what) + " requires determinant 1");
    }
}

} // namespace

SquareMatrix include_sl3(const SquareMatrix& m, std::optional<double> tol) {
    if (m.size() != 3) throw dimension_error("include_sl3 expects a 3x3 matrix");
    require_unimodular(m, tol, "include_sl3");
    SquareMatrix out = SquareMatrix::identity(4, m.backend());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.set(i, j, m.at(i, j));
    return out;
}

SquareMatrix include_sl2_pair(const SquareMatrix& top, const SquareMatrix& bottom,
                              std::optional<double> tol) {
    if (top.size() != 2 || bottom.size() != 2)
        throw dimension_error("include_sl2_pair expects 2x2 blocks");
    if (top.backend() != bottom.backend())
        throw backend_mismatch("include_sl2_pair blocks mix backends");
    require_unimodular(top, tol, "include_sl2_pair");
    require_unimodular(bottom, tol, "include_sl2_pair");
    SquareMatrix out = SquareMatrix::zero(4, top.backend());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            out.set(i, j, top.at(i, j));
            out.set(i + 2, j + 2, bottom.at(i, j));
        }
    return out;
}

Representation hyperbolic_cusp_holonomy(const TurnoverPresentation& presentation) {
    if (!presentation.is_euclidean())
        throw domain_error("cusp holonomy is defined for Euclidean order triples only");
    SquareMatrix a = turnover_rotation(presentation.n1, 1);
    SquareMatrix b = SquareMatrix::identity(4, Backend::exact);
    if (presentation.n1 == 3 && presentation.n2 == 3 && presentation.n3 == 3) {
        // The reference normalization: b rotates about the unit translate
        // of the fixed point of a.
        b = a * cusp_translation(Scalar(1), Scalar(0));
    } else {
        SquareMatrix t = cusp_translation(Scalar(1), Scalar(0));
        b = t * turnover_rotation(presentation.n2, 1) * t.inverse();
    }
    return Representation(presentation, a, b, FamilyTag::hyperbolic);
}

SquareMatrix slice_generator(double u, double v) {
    SquareMatrix k = SquareMatrix::zero(4, Backend::floating);
    k.set(0, 1, Scalar::floating(1.0));
    k.set(1, 1, Scalar::floating(u));
    k.set(1, 2, Scalar::floating(v));
    k.set(1, 3, Scalar::floating(1.0));
    k.set(2, 1, Scalar::floating(v));
    k.set(2, 2, Scalar::floating(-u));
    k.set(3, 1, Scalar::floating(2.0 * (u * u + v * v)));
    return k;
}

Representation slice_representation(double u, double v, double series_tol) {
    SquareMatrix a = turnover_rotation(3, 1).to_float();
    SquareMatrix e = matrix_exponential(slice_generator(u, v), series_tol);
    // rho(a^2 b) = exp K, so rho(b) = rho(a)^{-2} exp K = rho(a) exp K.
    SquareMatrix b = a * e;
    return Representation(TurnoverPresentation(3, 3, 3), a, b, FamilyTag::slice,
                          {Scalar::floating(u), Scalar::floating(v)});
}

std::pair<double, double> polar_slice_parameters(double t, double s) {
    return {t * std::cos(3.0 * s), t * std::sin(3.0 * s)};
}

Representation diagonal_representation(const Scalar& x1, const Scalar& x2, const Scalar& x3,
                                       std::optional<double> tol) {
    if (x1.backend() != x2.backend() || x2.backend() != x3.backend())
        throw backend_mismatch("diagonal parameters mix backends");
    Scalar prod = x1 * x2 * x3;
    Backend bk = x1.backend();
    if (bk == Backend::exact) {
        if (tol) throw config_error("diagonal_representation on the exact backend takes no tolerance");
        if (!prod.exact_value().is_one())
            throw domain_error("diagonal entries must multiply to 1");
    } else {
        if (!tol)
            throw config_error("diagonal_representation on the floating backend requires a tolerance");
        if (std::fabs(prod.float_value() - 1.0) > *tol)
            throw domain_error("diagonal entries must multiply to 1");
    }
    SquareMatrix a = include_sl3(permutation_p3(bk), tol);
    SquareMatrix d = SquareMatrix::identity(4, bk);
    d.set(0, 0, x1);
    d.set(1, 1, x2);
    d.set(2, 2, x3);
    // rho(a^2 b) = d, so rho(b) = rho(a) d.
    SquareMatrix b = a * d;
    return Representation(TurnoverPresentation(3, 3, 3), a, b, FamilyTag::diagonal,
                          {x1, x2, x3});
}

RelationReport verify_relations(const Representation& rho, std::optional<double> tol) {
    if (rho.backend() == Backend::exact && tol)
        throw config_error("verify_relations on the exact backend takes no tolerance");
    if (rho.backend() == Backend::floating && !tol)
        throw config_error("verify_relations on the floating backend requires a tolerance");
    RelationReport report;
    SquareMatrix id = SquareMatrix::identity(rho.dimension(), rho.backend());
    auto relators = rho.presentation().relators();
    bool pass = true;
    for (size_t i = 0; i < relators.size(); ++i) {
        SquareMatrix image = rho.evaluate(relators[i]);
        report.deviations[i] = image.max_abs_diff(id);
        if (rho.backend() == Backend::exact)
            pass = pass && image.exact_equals(id);
        else
            pass = pass && report.deviations[i] <= *tol;
    }
    report.pass = pass;
    return report;
}

std::pair<TangentCocycle, TangentCocycle> transversality_cocycles() {
    auto [d1, d2] = slice_derivative_matrices();
    SquareMatrix minv = cusp_translation(Scalar(1), Scalar(0)).inverse();
    SquareMatrix omega = turnover_rotation(3, 1);
    SquareMatrix omega_inv = omega.inverse();
    auto make = [&](const SquareMatrix& d) {
        TangentCocycle z;
        z.at_a = SquareMatrix::zero(4, Backend::exact);
        z.at_slice_generator = d * minv;
        // z(a^2 b) = Ad(rho(a^2)) z(b) when z(a) = 0; invert with a^3 = 1.
        z.at_b = omega * z.at_slice_generator * omega_inv;
        return z;
    };
    return {make(d1), make(d2)};
}

std::pair<SquareMatrix, SquareMatrix> slice_derivative_matrices() {
    SquareMatrix d1 = SquareMatrix::zero(4, Backend::exact);
    d1.set(0, 1, Scalar::exact(1, 2));
    d1.set(0, 3, Scalar::exact(1, 6));
    d1.set(1, 1, Scalar(1));
    d1.set(1, 3, Scalar::exact(1, 2));
    d1.set(2, 2, Scalar(-1));
    SquareMatrix d2 = SquareMatrix::zero(4, Backend::exact);
    d2.set(0, 2, Scalar::exact(1, 2));
    d2.set(1, 2, Scalar(1));
    d2.set(2, 1, Scalar(1));
    d2.set(2, 3, Scalar::exact(1, 2));
    return {d1, d2};
}

SquareMatrix degeneration_conjugate(const Scalar& x) {
    Backend bk = x.backend();
    if (bk == Backend::exact) {
        if (x.exact_value().is_zero()) throw domain_error("degeneration parameter must be nonzero");
    } else if (x.float_value() == 0.0) {
        throw domain_error("degeneration parameter must be nonzero");
    }
    Scalar one = bk == Backend::exact ? Scalar(1) : Scalar::floating(1.0);
    SquareMatrix c = SquareMatrix::identity(4, bk);
    c.set(0, 0, x);
    c.set(3, 3, one / x);
    SquareMatrix m = cusp_translation(one, bk == Backend::exact ? Scalar(0) : Scalar::floating(0.0));
    return c * m * c.inverse();
}

namespace {

SquareMatrix rotation_block2(int index) {
    // index 0: identity, 1: rotation by 2 pi / 3, 2: its inverse.
    SquareMatrix r = SquareMatrix::identity(2, Backend::exact);
    if (index == 0) return r;
    mpq_class half(1, 2);
    QuadExt c(-half);
    QuadExt s(mpq_class(0), half, 3);
    if (index == 2) s = -s;
    r.set(0, 0, Scalar(c));
    r.set(0, 1, Scalar(-s));
    r.set(1, 0, Scalar(s));
    r.set(1, 1, Scalar(c));
    return r;
}

SquareMatrix block4(const SquareMatrix& top, const SquareMatrix& bottom) {
    SquareMatrix out = SquareMatrix::zero(4, Backend::exact);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            out.set(i, j, top.at(i, j));
            out.set(i + 2, j + 2, bottom.at(i, j));
        }
    return out;
}

using BlockTuple = std::array<int, 4>;

BlockTuple swap_blocks(const BlockTuple& c) { return {c[2], c[3], c[0], c[1]}; }

int invert_index(int i) { return i == 0 ? 0 : 3 - i; }

BlockTuple invert_both(const BlockTuple& c) {
    return {invert_index(c[0]), invert_index(c[1]), invert_index(c[2]), invert_index(c[3])};
}

std::vector<BlockTuple> orbit_of(const BlockTuple& c) {
    std::vector<BlockTuple> orbit{c};
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (const BlockTuple& next : {swap_blocks(orbit[i]), invert_both(orbit[i])})
            if (std::find(orbit.begin(), orbit.end(), next) == orbit.end())
                orbit.push_back(next);
    }
    return orbit;
}

int case_of(const BlockTuple& c) {
    int lo = std::min(c[0], c[2]);
    int hi = std::max(c[0], c[2]);
    if (lo == 0 && hi == 0) return 4;
    if (lo == 0) return 3;
    if (lo == hi) return 1;
    return 2;
}

std::vector<QuadExt> trace_vector(const Representation& rho, const std::vector<Word>& ball) {
    // Walk the shortlex ball so each word extends a stored parent image.
    std::map<Word, SquareMatrix> images;
    SquareMatrix inv_a = rho.image_a().inverse();
    SquareMatrix inv_b = rho.image_b().inverse();
    std::vector<QuadExt> out;
    out.reserve(ball.size());
    for (const Word& w : ball) {
        SquareMatrix m = SquareMatrix::identity(4, Backend::exact);
        if (!w.is_identity()) {
            std::string parent_letters = w.letters().substr(0, w.letters().size() - 1);
            char last = w.letters().back();
            const SquareMatrix& parent = images.at(Word::parse(parent_letters));
            switch (last) {
                case 'a': m = parent * rho.image_a(); break;
                case 'A': m = parent * inv_a; break;
                case 'b': m = parent * rho.image_b(); break;
                case 'B': m = parent * inv_b; break;
            }
        }
        out.push_back(m.trace().exact_value());
        images.emplace(w, std::move(m));
    }
    return out;
}

// All sixteen signed block permutation candidates: diag sign flips times
// an optional block swap.
std::vector<SquareMatrix> conjugator_candidates() {
    std::vector<SquareMatrix> out;
    SquareMatrix swap = SquareMatrix::zero(4, Backend::exact);
    swap.set(0, 2, Scalar(1));
    swap.set(1, 3, Scalar(1));
    swap.set(2, 0, Scalar(1));
    swap.set(3, 1, Scalar(1));
    for (int mask = 0; mask < 4; ++mask) {
        SquareMatrix flip = SquareMatrix::identity(4, Backend::exact);
        if (mask & 1) flip.set(1, 1, Scalar(-1));
        if (mask & 2) flip.set(3, 3, Scalar(-1));
        out.push_back(flip);
        out.push_back(flip * swap);
    }
    return out;
}

} // namespace

Representation isolated_block_representation(const std::array<int, 4>& blocks) {
    for (int v : blocks)
        if (v < 0 || v > 2) throw domain_error("block index out of range");
    SquareMatrix x = block4(rotation_block2(blocks[0]), rotation_block2(blocks[2]));
    SquareMatrix a = block4(rotation_block2(blocks[1]), rotation_block2(blocks[3]));
    // rho(a^2 b) = x with rho(a)^3 = 1 forces rho(b) = rho(a) x.
    SquareMatrix b = a * x;
    std::vector<Scalar> params;
    for (int v : blocks) params.emplace_back(static_cast<long>(v));
    return Representation(TurnoverPresentation(3, 3, 3), a, b, FamilyTag::isolated,
                          std::move(params));
}

IsolatedEnumeration enumerate_isolated_points() {
    IsolatedEnumeration out;
    out.expected_count = 19;

    std::vector<BlockTuple> canonical;
    {
        std::vector<BlockTuple> seen;
        for (int x1 = 0; x1 < 3; ++x1)
            for (int a1 = 0; a1 < 3; ++a1)
                for (int x2 = 0; x2 < 3; ++x2)
                    for (int a2 = 0; a2 < 3; ++a2) {
                        BlockTuple c{x1, a1, x2, a2};
                        auto orbit = orbit_of(c);
                        BlockTuple least = *std::min_element(orbit.begin(), orbit.end());
                        if (least == c) canonical.push_back(c);
                    }
    }

    std::vector<Word> ball = word_ball(4);

    // Reference trace vector of the reducible diagonal class at (1,1,1).
    SquareMatrix ared = include_sl3(permutation_p3(Backend::exact));
    Representation red(TurnoverPresentation(3, 3, 3), ared, ared);
    std::vector<QuadExt> tv_red = trace_vector(red, ball);

    std::vector<std::vector<QuadExt>> traces;
    for (const BlockTuple& c : canonical) {
        Representation rho = isolated_block_representation(c);
        std::vector<QuadExt> tv = trace_vector(rho, ball);
        if (tv == tv_red) {
            ++out.on_surface_discarded;
            continue;
        }
        IsolatedClass cls{c, rho, case_of(c), (c[0] == 0 && c[2] == 0) ? 1 : 3, -1};
        out.classes.push_back(std::move(cls));
        traces.push_back(std::move(tv));
        ++out.case_tallies[static_cast<size_t>(case_of(c) - 1)];
    }
    out.count_matches = static_cast<int>(out.classes.size()) == out.expected_count;

    // Trace-equal pairs: decide whether any orientation-preserving
    // conjugacy could identify them.
    auto candidates = conjugator_candidates();
    std::mt19937_64 gen(0x15501a7edULL);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (size_t i = 0; i < out.classes.size(); ++i)
        for (size_t j = i + 1; j < out.classes.size(); ++j) {
            if (traces[i] != traces[j]) continue;
            out.classes[i].partner_index = static_cast<int>(j);
            out.classes[j].partner_index = static_cast<int>(i);

            const Representation& r1 = out.classes[i].rep;
            const Representation& r2 = out.classes[j].rep;

            IntertwinerEvidence ev;
            ev.pair_indices = {static_cast<int>(i), static_cast<int>(j)};
            ev.reflection_conjugator_found = false;
            ev.positive_det_sample_found = false;

            // Exact solution space of g r1(w) = r2(w) g for w in {a, b}.
            detail::Dense<QuadExt> sys(32, 16);
            int row = 0;
            for (const SquareMatrix* pair : {&r1.image_a(), &r1.image_b()}) {
                const SquareMatrix& m1 = *pair;
                const SquareMatrix& m2 =
                    (pair == &r1.image_a()) ? r2.image_a() : r2.image_b();
                for (int gi = 0; gi < 4; ++gi)
                    for (int gj = 0; gj < 4; ++gj, ++row)
                        for (int p = 0; p < 4; ++p)
                            for (int q = 0; q < 4; ++q) {
                                QuadExt coeff_pq(0);
                                if (gi == p) coeff_pq += m1.at(q, gj).exact_value();
                                if (gj == q) coeff_pq -= m2.at(gi, p).exact_value();
                                sys(row, p * 4 + q) += coeff_pq;
                            }
            }
            auto basis = detail::kernel_exact(sys);
            ev.space_dimension = static_cast<int>(basis.size());

            for (const SquareMatrix& g : candidates) {
                SquareMatrix gi = g.inverse();
                if ((g * r1.image_a() * gi).exact_equals(r2.image_a()) &&
                    (g * r1.image_b() * gi).exact_equals(r2.image_b())) {
                    if (g.determinant().exact_value() == QuadExt(-1))
                        ev.reflection_conjugator_found = true;
                    else
                        ev.positive_det_sample_found = true;
                }
            }

            ev.samples = 400;
            for (int s = 0; s < ev.samples; ++s) {
                std::vector<QuadExt> flat(16);
                for (const auto& b : basis) {
                    long c = coeff(gen);
                    if (c == 0) continue;
                    for (int k = 0; k < 16; ++k) flat[k] += b[k] * QuadExt(c);
                }
                SquareMatrix g = SquareMatrix::from_exact(4, std::move(flat));
                if (g.determinant().exact_value().sign() > 0)
                    ev.positive_det_sample_found = true;
            }
            out.collision_evidence.push_back(std::move(ev));
        }
    return out;
}

} // namespace turnover
