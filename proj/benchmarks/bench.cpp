#include <benchmark/benchmark.h>

#include "turnover/characters.hpp"
#include "turnover/cohomology.hpp"
#include "turnover/cusps.hpp"
#include "turnover/linalg.hpp"
#include "turnover/representation.hpp"
#include "turnover/words.hpp"

using namespace turnover;

namespace {

Representation base_holonomy() {
    return hyperbolic_cusp_holonomy(TurnoverPresentation(3, 3, 3));
}

void BM_AdjointAction(benchmark::State& state) {
    const SquareMatrix g = base_holonomy().image_a().to_float();
    for (auto _ : state) benchmark::DoNotOptimize(adjoint_action(g));
}
BENCHMARK(BM_AdjointAction)->Unit(benchmark::kMicrosecond);

void BM_ExteriorSquare(benchmark::State& state) {
    const SquareMatrix g = base_holonomy().image_a();
    for (auto _ : state) benchmark::DoNotOptimize(exterior_square(g));
}
BENCHMARK(BM_ExteriorSquare)->Unit(benchmark::kMicrosecond);

void BM_KernelBasisExact(benchmark::State& state) {
    const Representation rho = base_holonomy();
    const SquareMatrix M = module_action(ModuleKind::adjoint, rho.image_a()) -
                           SquareMatrix::identity(15, Backend::exact);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(M));
}
BENCHMARK(BM_KernelBasisExact)->Unit(benchmark::kMicrosecond);

void BM_Z1SolveAdjoint(benchmark::State& state) {
    const Representation rho = base_holonomy();
    for (auto _ : state) benchmark::DoNotOptimize(z1_dimension(rho, ModuleKind::adjoint));
}
BENCHMARK(BM_Z1SolveAdjoint)->Unit(benchmark::kMillisecond);

void BM_CohomologyReportAdjoint(benchmark::State& state) {
    const Representation rho = base_holonomy();
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_report(rho, ModuleKind::adjoint));
}
BENCHMARK(BM_CohomologyReportAdjoint)->Unit(benchmark::kMillisecond);

void BM_MatrixExponential(benchmark::State& state) {
    const SquareMatrix N = SquareMatrix::from_float(
        4, {0.0, 0.3, 0.1, 0.05, 0.0, 0.0, 0.3, 0.1, 0.0, 0.0, 0.0, 0.3, 0.0, 0.0, 0.0, 0.0});
    for (auto _ : state) benchmark::DoNotOptimize(matrix_exponential(N, 1e-14));
}
BENCHMARK(BM_MatrixExponential)->Unit(benchmark::kMicrosecond);

void BM_SliceRepresentation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(slice_representation(0.2, 0.1));
}
BENCHMARK(BM_SliceRepresentation)->Unit(benchmark::kMicrosecond);

void BM_EigenDecomposition(benchmark::State& state) {
    const SquareMatrix A = slice_representation(0.2, 0.1).evaluate("aab");
    for (auto _ : state) benchmark::DoNotOptimize(eigen_decomposition(A, 1e-9));
}
BENCHMARK(BM_EigenDecomposition)->Unit(benchmark::kMicrosecond);

void BM_SurfaceSampleExactGrid(benchmark::State& state) {
    SurfaceGrid grid;
    grid.x1_values = linear_grid(Scalar::exact(1, 4), Scalar::exact(4, 1), 10);
    grid.x2_values = grid.x1_values;
    for (auto _ : state) benchmark::DoNotOptimize(sample_surface(grid));
}
BENCHMARK(BM_SurfaceSampleExactGrid)->Unit(benchmark::kMillisecond);

void BM_IsolatedEnumeration(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_isolated_points());
}
BENCHMARK(BM_IsolatedEnumeration)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
