#include <benchmark/benchmark.h>

#include "twgr/derivation.hpp"

namespace {

twgr::RingPtr dihedral_ring(std::size_t n, twgr::CocycleKind kind) {
  return twgr::TwistedRing::make(twgr::dihedral_cocycle(kind, twgr::dihedral(n), twgr::make_field(3, 2)));
}

void BM_DerGenerators(benchmark::State& state) {
  const auto r = dihedral_ring(static_cast<std::size_t>(state.range(0)), twgr::CocycleKind::Alpha3);
  for (auto _ : state) benchmark::DoNotOptimize(twgr::der_space_generators(r).dim);
}
BENCHMARK(BM_DerGenerators)->DenseRange(3, 12, 3);

void BM_DerOracle(benchmark::State& state) {
  const auto r = dihedral_ring(static_cast<std::size_t>(state.range(0)), twgr::CocycleKind::Alpha3);
  for (auto _ : state) benchmark::DoNotOptimize(twgr::der_space_oracle(r).dim);
}
BENCHMARK(BM_DerOracle)->DenseRange(3, 12, 3);

void BM_ClosedForm(benchmark::State& state) {
  const auto r = dihedral_ring(static_cast<std::size_t>(state.range(0)), twgr::CocycleKind::Alpha3);
  for (auto _ : state) {
    const auto m = twgr::dihedral_constraints(r);
    benchmark::DoNotOptimize(m.cols() - twgr::rank(m));
  }
}
BENCHMARK(BM_ClosedForm)->DenseRange(3, 12, 3);

void BM_HH1(benchmark::State& state) {
  const auto r = dihedral_ring(static_cast<std::size_t>(state.range(0)), twgr::CocycleKind::Alpha1);
  for (auto _ : state) benchmark::DoNotOptimize(twgr::hh1(r).dim);
}
BENCHMARK(BM_HH1)->DenseRange(4, 16, 4);

void BM_Rref(benchmark::State& state) {
  const auto r = dihedral_ring(static_cast<std::size_t>(state.range(0)), twgr::CocycleKind::Alpha3);
  const auto m = twgr::der_space_generators(r).constraints;
  for (auto _ : state) benchmark::DoNotOptimize(twgr::rref(m).rank);
}
BENCHMARK(BM_Rref)->DenseRange(3, 24, 7);

}  // namespace

BENCHMARK_MAIN();
