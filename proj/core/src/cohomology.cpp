#include "turnover/cohomology.hpp"

#include <string>

#include "dense.hpp"

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

detail::Dense<QuadExt> stack_exact(const std::vector<SquareMatrix>& blocks, int block_cols,
                                   int extra_cols = 0) {
    int m = blocks.front().size();
    int block_rows = static_cast<int>(blocks.size()) / block_cols;
    detail::Dense<QuadExt> d(block_rows * m, block_cols * m + extra_cols);
    for (int br = 0; br < block_rows; ++br)
        for (int bc = 0; bc < block_cols; ++bc) {
            const auto& e = blocks[static_cast<size_t>(br) * block_cols + bc].exact_entries();
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    d(br * m + i, bc * m + j) = e[static_cast<size_t>(i) * m + j];
        }
    return d;
}

detail::Dense<double> stack_float(const std::vector<SquareMatrix>& blocks, int block_cols,
                                  int extra_cols = 0) {
    int m = blocks.front().size();
    int block_rows = static_cast<int>(blocks.size()) / block_cols;
    detail::Dense<double> d(block_rows * m, block_cols * m + extra_cols);
    for (int br = 0; br < block_rows; ++br)
        for (int bc = 0; bc < block_cols; ++bc) {
            const auto& e = blocks[static_cast<size_t>(br) * block_cols + bc].float_entries();
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    d(br * m + i, bc * m + j) = e[static_cast<size_t>(i) * m + j];
        }
    return d;
}

int stacked_rank(const std::vector<SquareMatrix>& blocks, int block_cols,
                 const std::optional<double>& tol, const char* what) {
    if (blocks.front().is_exact()) {
        reject_tol(tol, what);
        return detail::rank_exact(stack_exact(blocks, block_cols));
    }
    require_tol(tol, what);
    return detail::rank_float(stack_float(blocks, block_cols), *tol);
}

SquareMatrix generator_value(const Representation& rho, const SquareMatrix& at_a,
                             const SquareMatrix& at_b, char letter) {
    switch (letter) {
    case 'a': return at_a;
    case 'b': return at_b;
    case 'A': {
        SquareMatrix gi = rho.image_a().inverse();
        return -(gi * at_a * rho.image_a());
    }
    case 'B': {
        SquareMatrix gi = rho.image_b().inverse();
        return -(gi * at_b * rho.image_b());
    }
    default: throw internal_error("generator_value: bad letter");
    }
}

} // namespace

int module_dimension(ModuleKind kind) {
    switch (kind) {
    case ModuleKind::adjoint: return 15;
    case ModuleKind::standard: return 4;
    case ModuleKind::wedge2: return 6;
    }
    throw internal_error("module_dimension: bad kind");
}

const char* module_name(ModuleKind kind) {
    switch (kind) {
    case ModuleKind::adjoint: return "adjoint";
    case ModuleKind::standard: return "standard";
    case ModuleKind::wedge2: return "wedge2";
    }
    throw internal_error("module_name: bad kind");
}

SquareMatrix module_action(ModuleKind kind, const SquareMatrix& g) {
    switch (kind) {
    case ModuleKind::adjoint: return adjoint_action(g);
    case ModuleKind::standard: return g;
    case ModuleKind::wedge2: return exterior_square(g);
    }
    throw internal_error("module_action: bad kind");
}

int h0_dimension(const Representation& rho, ModuleKind kind, const std::vector<Word>& words,
                 std::optional<double> tol) {
    int m = module_dimension(kind);
    if (words.empty()) {
        if (rho.backend() == Backend::exact)
            reject_tol(tol, "h0_dimension");
        else
            require_tol(tol, "h0_dimension");
        return m;
    }
    std::vector<SquareMatrix> blocks;
    blocks.reserve(words.size());
    SquareMatrix id = SquareMatrix::identity(m, rho.backend());
    for (const Word& w : words) blocks.push_back(module_action(kind, rho.evaluate(w)) - id);
    return joint_kernel(blocks, tol).rank();
}

int z1_dimension(const Representation& rho, ModuleKind kind, std::optional<double> tol) {
    int m = module_dimension(kind);
    std::vector<SquareMatrix> blocks; // three relator rows, two generator columns
    for (const Word& r : rho.presentation().relators())
        for (char g : {'a', 'b'}) {
            SquareMatrix acc = SquareMatrix::zero(m, rho.backend());
            GroupRingElement dg = fox_derivative(r, g);
            for (const auto& [coeff, prefix] : dg.terms()) {
                Scalar c = rho.backend() == Backend::exact ? Scalar(coeff)
                                                           : Scalar::floating(coeff.get_d());
                acc = acc + module_action(kind, rho.evaluate(prefix)).scaled(c);
            }
            blocks.push_back(acc);
        }
    return 2 * m - stacked_rank(blocks, 2, tol, "z1_dimension");
}

CohomologyReport cohomology_report(const Representation& rho, ModuleKind kind,
                                   std::optional<double> tol) {
    CohomologyReport rep;
    rep.module = kind;
    int m = module_dimension(kind);
    auto cones = rho.presentation().cone_generators();
    for (int i = 0; i < 3; ++i) rep.cone_h0[i] = h0_dimension(rho, kind, {cones[i]}, tol);
    rep.h0 = h0_dimension(rho, kind, {Word::gen('a'), Word::gen('b')}, tol);
    rep.z1 = z1_dimension(rho, kind, tol);
    rep.b1 = m - rep.h0;
    rep.h1 = rep.z1 - rep.b1;
    if (rep.h1 < 0) throw internal_error("cohomology_report: negative h1");
    rep.euler = -m + rep.cone_h0[0] + rep.cone_h0[1] + rep.cone_h0[2];
    rep.duality_consistent = (2 * rep.h0 - rep.h1 == rep.euler);
    return rep;
}

std::array<int, 3> fixed_space_tower(const Representation& rho, std::optional<double> tol) {
    auto [u, v] = gamma0_generators();
    std::array<int, 3> out{};
    out[0] = h0_dimension(rho, ModuleKind::adjoint, {u}, tol);
    out[1] = h0_dimension(rho, ModuleKind::adjoint, {u, v}, tol);
    out[2] = h0_dimension(rho, ModuleKind::adjoint, {u, v, Word::gen('a')}, tol);
    return out;
}

bool is_strongly_regular(const Representation& rho, std::optional<double> tol) {
    auto [u, v] = gamma0_generators();
    SquareMatrix gu = rho.evaluate(u);
    SquareMatrix gv = rho.evaluate(v);
    bool commute;
    if (rho.backend() == Backend::exact) {
        commute = (gu * gv).exact_equals(gv * gu);
    } else {
        require_tol(tol, "is_strongly_regular");
        commute = (gu * gv).max_abs_diff(gv * gu) <= *tol;
    }
    return commute && h0_dimension(rho, ModuleKind::adjoint, {u, v}, tol) == 3;
}

SquareMatrix evaluate_cocycle(const Representation& rho, const SquareMatrix& at_a,
                              const SquareMatrix& at_b, const Word& w) {
    int n = rho.dimension();
    if (at_a.size() != n || at_b.size() != n)
        throw dimension_error("evaluate_cocycle: cocycle values must match the image size");
    SquareMatrix acc = SquareMatrix::zero(n, rho.backend());
    SquareMatrix g = SquareMatrix::identity(n, rho.backend());
    for (char letter : w.letters()) {
        SquareMatrix z = generator_value(rho, at_a, at_b, letter);
        acc = acc + g * z * g.inverse();
        g = g * rho.evaluate(Word::parse(std::string(1, letter)));
    }
    return acc;
}

CocycleCheck verify_cocycle(const Representation& rho, const SquareMatrix& at_a,
                            const SquareMatrix& at_b, std::optional<double> tol) {
    CocycleCheck out;
    bool exact = rho.backend() == Backend::exact;
    if (exact)
        reject_tol(tol, "verify_cocycle");
    else
        require_tol(tol, "verify_cocycle");
    auto relators = rho.presentation().relators();
    out.pass = true;
    for (int i = 0; i < 3; ++i) {
        SquareMatrix z = evaluate_cocycle(rho, at_a, at_b, relators[i]);
        SquareMatrix zf = exact ? z.to_float() : z;
        out.relator_deviations[i] = zf.max_abs_diff(SquareMatrix::zero(rho.dimension(), Backend::floating));
        bool ok = exact ? z.exact_equals(SquareMatrix::zero(rho.dimension(), Backend::exact))
                        : out.relator_deviations[i] <= *tol;
        out.pass = out.pass && ok;
    }
    return out;
}

bool is_coboundary(const Representation& rho,
                   const std::vector<std::pair<Word, SquareMatrix>>& values,
                   std::optional<double> tol) {
    if (values.empty()) return true;
    const int m = 15;
    std::vector<SquareMatrix> sys;
    std::vector<std::vector<Scalar>> rhs;
    SquareMatrix id = SquareMatrix::identity(m, rho.backend());
    for (const auto& [w, val] : values) {
        sys.push_back(id - module_action(ModuleKind::adjoint, rho.evaluate(w)));
        rhs.push_back(traceless_coordinates(val));
    }
    int k = static_cast<int>(sys.size());
    if (rho.backend() == Backend::exact) {
        reject_tol(tol, "is_coboundary");
        detail::Dense<QuadExt> plain = stack_exact(sys, 1);
        detail::Dense<QuadExt> aug = stack_exact(sys, 1, 1);
        for (int b = 0; b < k; ++b)
            for (int i = 0; i < m; ++i) aug(b * m + i, m) = rhs[b][i].exact_value();
        return detail::rank_exact(std::move(plain)) == detail::rank_exact(std::move(aug));
    }
    require_tol(tol, "is_coboundary");
    detail::Dense<double> plain = stack_float(sys, 1);
    detail::Dense<double> aug = stack_float(sys, 1, 1);
    for (int b = 0; b < k; ++b)
        for (int i = 0; i < m; ++i) aug(b * m + i, m) = rhs[b][i].float_value();
    return detail::rank_float(std::move(plain), *tol) == detail::rank_float(std::move(aug), *tol);
}

} // namespace turnover
