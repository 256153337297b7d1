#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "turnover/linalg.hpp"
#include "turnover/representation.hpp"
#include "turnover/words.hpp"

namespace turnover {

// Coefficient module for the twisted cochain complex: conjugation on
// traceless matrices, the defining action on R^4, or the induced action
// on Lambda^2 R^4.
enum class ModuleKind { adjoint, standard, wedge2 };

int module_dimension(ModuleKind kind);
const char* module_name(ModuleKind kind);

// Module matrix of one group element image. Adjoint needs det g = 1.
SquareMatrix module_action(ModuleKind kind, const SquareMatrix& g);

// Dimension of the joint fixed space of the listed words. An empty list
// fixes everything. Exact backend: tol must not be supplied. Floating
// backend: tol is mandatory.
int h0_dimension(const Representation& rho, ModuleKind kind,
                 const std::vector<Word>& words,
                 std::optional<double> tol = std::nullopt);

// Dimension of the cocycle space: pairs (z(a), z(b)) in module^2 killed
// by the free-derivative rows of all three relators.
int z1_dimension(const Representation& rho, ModuleKind kind,
                 std::optional<double> tol = std::nullopt);

struct CohomologyReport {
    ModuleKind module = ModuleKind::adjoint;
    std::array<int, 3> cone_h0{}; // cyclic subgroups <a>, <b>, <ab>
    int h0 = 0;
    int z1 = 0;
    int b1 = 0;
    int h1 = 0;
    int euler = 0;                   // -dim + sum of cone_h0
    bool duality_consistent = false; // 2 h0 - h1 == euler
};

CohomologyReport cohomology_report(const Representation& rho, ModuleKind kind,
                                   std::optional<double> tol = std::nullopt);

// Adjoint fixed-space dimensions along the subgroup chain
// <a^2 b>  <  <a^2 b, b a^2>  <  whole group.
std::array<int, 3> fixed_space_tower(const Representation& rho,
                                     std::optional<double> tol = std::nullopt);

// The images of a^2 b and b a^2 commute and their joint adjoint fixed
// space is exactly three-dimensional.
bool is_strongly_regular(const Representation& rho,
                         std::optional<double> tol = std::nullopt);

// Value of an adjoint cocycle on a word from its generator values, via
// z(uv) = z(u) + rho(u) z(v) rho(u)^{-1}.
SquareMatrix evaluate_cocycle(const Representation& rho, const SquareMatrix& at_a,
                              const SquareMatrix& at_b, const Word& w);

struct CocycleCheck {
    std::array<double, 3> relator_deviations{};
    bool pass = false;
};

// Relator test for a prospective adjoint cocycle given on the generators.
CocycleCheck verify_cocycle(const Representation& rho, const SquareMatrix& at_a,
                            const SquareMatrix& at_b,
                            std::optional<double> tol = std::nullopt);

// Whether the adjoint cocycle with the given values is principal: some
// traceless W solves z(w) = W - rho(w) W rho(w)^{-1} for every listed
// word. Decided by rank feasibility of the stacked linear system.
bool is_coboundary(const Representation& rho,
                   const std::vector<std::pair<Word, SquareMatrix>>& values,
                   std::optional<double> tol = std::nullopt);

} // namespace turnover
