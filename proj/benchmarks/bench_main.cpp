#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "pcz/depca.hpp"
#include "pcz/diagnostics.hpp"
#include "pcz/extension.hpp"
#include "pcz/signals.hpp"
#include "pcz/transforms.hpp"

namespace {

void BM_MultiplyNorm(benchmark::State& state) {
  const pcz::GridFunction f = pcz::psi_step_grid({-32, 32}, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = pcz::norm_report(pcz::multiply(f, f));
    benchmark::DoNotOptimize(r.sup_norm);
  }
}
BENCHMARK(BM_MultiplyNorm)->Arg(16)->Arg(64)->Arg(256);

void BM_ZaaScan(benchmark::State& state) {
  const pcz::GridFunction f = pcz::psi_step_grid({-32, 32}, 64);
  for (auto _ : state) {
    auto rep = pcz::zaa_scan(f, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(rep.best_shift);
  }
}
BENCHMARK(BM_ZaaScan)->Arg(4)->Arg(16);

void BM_UcModulus(benchmark::State& state) {
  const pcz::GridFunction f =
      pcz::linear_extension(pcz::psi_sequence({-34, 34}), static_cast<int>(state.range(0)),
                            {-32, 32});
  const auto deltas = pcz::default_deltas(f.samples_per_unit());
  for (auto _ : state) {
    auto rep = pcz::uc_modulus(f, deltas);
    benchmark::DoNotOptimize(rep.modulus_table.back().second);
  }
}
BENCHMARK(BM_UcModulus)->Arg(16)->Arg(64);

void BM_ConvFullLine(benchmark::State& state) {
  const pcz::GridFunction f = pcz::GridFunction::from_continuous_scalar(
      {-16, 16}, static_cast<int>(state.range(0)),
      [](double t) { return std::sin(2.0 * std::numbers::pi * t); });
  const pcz::Kernel k = pcz::Kernel::gauss_heat(0.5);
  for (auto _ : state) {
    auto out = pcz::conv_full_line(k, f, 1e-6);
    benchmark::DoNotOptimize(out.interior_data().data());
  }
}
BENCHMARK(BM_ConvFullLine)->Arg(32)->Arg(64);

void BM_HeatSolve(benchmark::State& state) {
  const pcz::GridFunction u0 = pcz::GridFunction::from_continuous_scalar(
      {-16, 16}, 64, [](double x) { return std::sin(x); });
  for (auto _ : state) {
    auto u = pcz::heat_solve(u0, 0.5, 1e-6);
    benchmark::DoNotOptimize(u.interior_data().data());
  }
}
BENCHMARK(BM_HeatSolve);

void BM_ReduceToDifference(benchmark::State& state) {
  const auto sys = pcz::depca::scalar_system(
      [](double t) { return -0.8 + 0.1 * std::sin(2.0 * t); },
      [](double t) { return 0.2 * std::cos(t); }, [](double t) { return std::sin(3.0 * t); });
  for (auto _ : state) {
    auto d = pcz::depca::reduce_to_difference(sys, {-4, 4}, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(d.coeff.data());
  }
}
BENCHMARK(BM_ReduceToDifference)->Arg(64)->Arg(256);

void BM_BoundedSolution(benchmark::State& state) {
  const auto sys = pcz::depca::scalar_system([](double) { return -1.0; },
                                             [](double) { return 0.2; },
                                             [](double t) { return std::sin(t) + 0.5; });
  for (auto _ : state) {
    auto sol = pcz::depca::bounded_solution(sys, {-8, 8}, 128, 1e-10, /*uc_check=*/false);
    benchmark::DoNotOptimize(sol.integer_values.data().data());
  }
}
BENCHMARK(BM_BoundedSolution);

}  // namespace

BENCHMARK_MAIN();
