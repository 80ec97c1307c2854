#include <benchmark/benchmark.h>

#include <random>

#include "qck/bloch.hpp"
#include "qck/density.hpp"
#include "qck/ggm.hpp"
#include "qck/sectors.hpp"
#include "qck/spin1.hpp"
#include "qck/vopt.hpp"

namespace {

qck::ComplexMatrix random_state(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  qck::ComplexMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = {n(rng), n(rng)};
  qck::ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

void BM_GgmBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qck::ggm_basis(d));
}
BENCHMARK(BM_GgmBasis)->DenseRange(2, 8, 2);

void BM_StructureConstants(benchmark::State& state) {
  const auto basis = qck::ggm_basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qck::structure_constants(basis));
}
BENCHMARK(BM_StructureConstants)->DenseRange(2, 5);

void BM_Validate(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = random_state(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(qck::validate(m, 1e-10));
}
BENCHMARK(BM_Validate)->Arg(2)->Arg(3)->Arg(8);

void BM_BlochRoundTrip(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto basis = qck::ggm_basis(d);
  const auto m = random_state(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qck::from_bloch(qck::to_bloch(m, basis), basis));
}
BENCHMARK(BM_BlochRoundTrip)->Arg(2)->Arg(3)->Arg(6);

void BM_Spin1Case1(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto p = qck::spin1::Params::from_matrix(random_state(3, rng));
  for (auto _ : state) benchmark::DoNotOptimize(qck::spin1::case1_check(p, 1e-10));
}
BENCHMARK(BM_Spin1Case1);

void BM_Spin1Sample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qck::spin1::sample_physical(1000, 42));
}
BENCHMARK(BM_Spin1Sample)->Unit(benchmark::kMillisecond);

void BM_SectorReport(benchmark::State& state) {
  const auto model = qck::sectors::LatticeModel::periodic_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qck::sectors::full_report(model));
}
BENCHMARK(BM_SectorReport)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Optimize(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  const auto basis = qck::ggm_basis(d);
  qck::ComplexMatrix h = random_state(d, rng);
  h -= random_state(d, rng);
  const auto obj = qck::vopt::Objective::linear(h);
  for (auto _ : state)
    benchmark::DoNotOptimize(qck::vopt::optimize(obj, qck::bloch_origin(d), qck::vopt::OptConfig{}, basis));
}
BENCHMARK(BM_Optimize)->Arg(2)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
