#include <benchmark/benchmark.h>

#include "lagplace/lagrangian.hpp"
#include "lagplace/solver.hpp"

namespace lagplace {
namespace {

void BM_Charpoly(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  Rng rng(1);
  const ComplexMatrix a = rng.complex_normal_matrix(size, size);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(a));
}
BENCHMARK(BM_Charpoly)->Arg(3)->Arg(6)->Arg(12);

void BM_PolyMatrixDet(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  Rng rng(2);
  PolyMatrix m(size, size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) m(r, c) = Poly({rng.complex_normal(), rng.complex_normal()});
  }
  for (auto _ : state) benchmark::DoNotOptimize(poly_matrix_det(m));
}
BENCHMARK(BM_PolyMatrixDet)->Arg(3)->Arg(6)->Arg(9);

void BM_PhiMap(benchmark::State& state) {
  const auto sys = std::get<SymmetricSystem>(random_generic_system(3, 6, false, 3));
  Rng rng(3);
  const SymmetricGain f = SymmetricGain::from_matrix(rng.complex_symmetric_matrix(3));
  for (auto _ : state) benchmark::DoNotOptimize(phi_map(sys, f));
}
BENCHMARK(BM_PhiMap);

void BM_CharacteristicCofactors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PolyMatrix dn = canonical_denominator(n);
  std::vector<int> left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = i;
    right[i] = n + i;
  }
  const PolyMatrix d = dn.select_columns(left);
  const PolyMatrix num = dn.select_columns(right);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_cofactors(d, num));
}
BENCHMARK(BM_CharacteristicCofactors)->Arg(2)->Arg(3);

void BM_TrackAllPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bool hamiltonian = state.range(1) != 0;
  const int delta = hamiltonian ? n * (n + 1) : n * (n + 1) / 2;
  const PlacementProblem prob(random_generic_system(n, delta, hamiltonian, 1),
                              random_target(delta, hamiltonian, 1));
  SolverConfig config;
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(track_all_paths(prob, 1, config));
}
BENCHMARK(BM_TrackAllPaths)->Args({2, 0})->Args({2, 1})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lagplace

BENCHMARK_MAIN();
