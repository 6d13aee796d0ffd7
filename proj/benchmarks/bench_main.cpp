#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "friedlab/heat_mellin.hpp"
#include "friedlab/suspension_dynamics.hpp"
#include "friedlab/torsion_calculus.hpp"
#include "friedlab/zeta_spectral.hpp"

using namespace friedlab;

namespace {

GradedSpectrum spectrum_with(int pairs) {
  GradedSpectrum::DegreeMap map;
  for (int j = 0; j < pairs; ++j)
    map[j % 4].push_back({std::polar(1.0, 0.3 * j), std::polar(1.0, 0.5 + 0.7 * j), 1});
  return GradedSpectrum(3, std::move(map));
}

Scenario cycle_scenario(int points) {
  std::vector<int> perm(points);
  std::vector<FiberMatrix> maps;
  for (int i = 0; i < points; ++i) {
    perm[i] = (i + 1) % points;
    maps.push_back({std::polar(1.0, 0.1 * i)});
  }
  Scenario s;
  s.model = FinitePermutation{perm, maps};
  return s;
}

void BM_RuelleSeries(benchmark::State& state) {
  const auto spec = spectrum_with(20);
  for (auto _ : state) benchmark::DoNotOptimize(ruelle_series(spec, {0.7, 0.3}, state.range(0)));
}
BENCHMARK(BM_RuelleSeries)->Arg(50)->Arg(200)->Arg(1000);

void BM_RuelleClosedForm(benchmark::State& state) {
  const auto spec = spectrum_with(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ruelle_closed_form(spec, {0.7, 0.3}));
}
BENCHMARK(BM_RuelleClosedForm)->Arg(4)->Arg(20)->Arg(100);

void BM_FriedResidual(benchmark::State& state) {
  const auto spec = spectrum_with(20);
  for (auto _ : state) benchmark::DoNotOptimize(fried_residual(spec, {1.0, 0.3}));
}
BENCHMARK(BM_FriedResidual);

void BM_RuelleDynamical(benchmark::State& state) {
  const auto s = cycle_scenario(static_cast<int>(state.range(0)));
  const auto cutoffs = canonical_cutoffs(s);
  for (auto _ : state) benchmark::DoNotOptimize(ruelle_dynamical(s, cutoffs, 1.0, 200));
}
BENCHMARK(BM_RuelleDynamical)->Arg(3)->Arg(12);

void BM_TorsionFixedPointForm(benchmark::State& state) {
  const auto s = cycle_scenario(6);
  const auto cutoffs = canonical_cutoffs(s);
  for (auto _ : state) benchmark::DoNotOptimize(torsion_fixed_point_form(s, cutoffs, 4.0, 200));
}
BENCHMARK(BM_TorsionFixedPointForm);

void BM_MellinTorsion(benchmark::State& state) {
  const auto model = line_model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mellin_torsion(model, 1.0));
}
BENCHMARK(BM_MellinTorsion)->Arg(1)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
