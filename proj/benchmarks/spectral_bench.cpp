#include <benchmark/benchmark.h>

#include "mgnn/exp/generators.hpp"
#include "mgnn/mlgraph/eigen.hpp"
#include "mgnn/mlgraph/supra.hpp"

namespace {

using namespace mgnn;

void BM_SymmetricEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ERMultiplexSpec spec;
  spec.n_nodes = n / 2;
  spec.p = {0.2, 0.4};
  const SupraMatrix lap = supra_laplacian(er_multiplex_generate(spec));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigenvalues(lap.values(), lap.dim()));
  state.SetComplexityN(static_cast<int64_t>(n));
}
BENCHMARK(BM_SymmetricEigenvalues)->RangeMultiplier(2)->Range(50, 800)->Complexity(benchmark::oNCubed);

// One dataset instance: generation plus three eigensolves.
void BM_SuperdiffusionLabel(benchmark::State& state) {
  ERMultiplexSpec spec;
  spec.p = {0.1, 0.3};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    spec.seed = ++seed;
    benchmark::DoNotOptimize(is_superdiffusive(er_multiplex_generate(spec)).margin);
  }
}
BENCHMARK(BM_SuperdiffusionLabel);

}  // namespace
