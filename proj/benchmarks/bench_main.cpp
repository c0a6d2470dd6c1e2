#include <benchmark/benchmark.h>

#include "hq/cohen.hpp"
#include "hq/dirichlet.hpp"
#include "hq/restrict.hpp"
#include "hq/shintani.hpp"

namespace {

const hq::IdealCharacter kTrivial = hq::IdealCharacter::trivial();

void BM_HurwitzRange(benchmark::State& state) {
  for (auto _ : state)
    for (hq::Int n = 0; n <= state.range(0); ++n) benchmark::DoNotOptimize(hq::hurwitz_H(n));
}
BENCHMARK(BM_HurwitzRange)->Arg(100)->Arg(1000);

void BM_RelativeDiscriminant(benchmark::State& state) {
  auto F = hq::RealQuadField::make(13);
  for (auto _ : state)
    for (hq::Int a = -10; a <= 10; ++a) benchmark::DoNotOptimize(hq::relative_discriminant(F, {a, 7}));
}
BENCHMARK(BM_RelativeDiscriminant);

void BM_ZetaF(benchmark::State& state) {
  auto F = hq::RealQuadField::make(static_cast<hq::Int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hq::zeta_F_neg(F, -3));
}
BENCHMARK(BM_ZetaF)->Arg(5)->Arg(229);

void BM_HeckeL(benchmark::State& state) {
  auto F = hq::RealQuadField::make(5);
  auto chi = hq::relative_discriminant(F, {5, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hq::hecke_L_neg(chi, kTrivial, -1));
}
BENCHMARK(BM_HeckeL);

void BM_GTable(benchmark::State& state) {
  auto F = hq::RealQuadField::make(5);
  auto u = hq::find_restriction_unit(F);
  for (auto _ : state) benchmark::DoNotOptimize(hq::g_table(F, 1, kTrivial, u, state.range(0), nullptr, 1));
}
BENCHMARK(BM_GTable)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_RestrictThetaF(benchmark::State& state) {
  auto F = hq::RealQuadField::make(8);
  auto u = hq::find_restriction_unit(F);
  for (auto _ : state) benchmark::DoNotOptimize(hq::restrict_theta_F(F, u, state.range(0)));
}
BENCHMARK(BM_RestrictThetaF)->Arg(500);

}  // namespace
BENCHMARK_MAIN();
