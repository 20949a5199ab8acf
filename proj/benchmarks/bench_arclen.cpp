// Microbenchmarks pitting the closed forms against their numerical oracles.
// The point is not to race them (the closed forms win by orders of
// magnitude) but to keep an eye on the cost of the verification machinery.

#include <sstream>

#include <benchmark/benchmark.h>

#include "arclen/quadrature.hpp"
#include "arclen/solver.hpp"
#include "arclen/sweep.hpp"
#include "arclen/trajectory.hpp"

namespace {

const arclen::ProjectileParams kNatural(1.0, 1.0);

void BM_arc_length_closed_form(benchmark::State& state) {
  const arclen::Angle theta(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(arclen::arc_length_closed_form(theta, kNatural));
}
BENCHMARK(BM_arc_length_closed_form);

void BM_arc_length_derivative_closed_form(benchmark::State& state) {
  const arclen::Angle theta(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(arclen::arc_length_derivative_closed_form(theta, kNatural));
}
BENCHMARK(BM_arc_length_derivative_closed_form);

void BM_arc_length_quadrature_default(benchmark::State& state) {
  const arclen::Angle theta(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(arclen::arc_length_quadrature(theta, kNatural));
}
BENCHMARK(BM_arc_length_quadrature_default);

void BM_arc_length_quadrature_tight(benchmark::State& state) {
  const arclen::Angle theta(1.0);
  const arclen::QuadratureConfig tight{1e-12, 1e-14, 50, {}};
  for (auto _ : state)
    benchmark::DoNotOptimize(arclen::arc_length_quadrature(theta, kNatural, tight));
}
BENCHMARK(BM_arc_length_quadrature_tight);

void BM_arc_length_quadrature_vertical(benchmark::State& state) {
  const arclen::Angle theta(arclen::half_pi);
  for (auto _ : state)
    benchmark::DoNotOptimize(arclen::arc_length_quadrature(theta, kNatural));
}
BENCHMARK(BM_arc_length_quadrature_vertical);

void BM_leibniz_derivative(benchmark::State& state) {
  const arclen::ParametricIntegral integral = arclen::projectile_arc_length_integral(kNatural);
  for (auto _ : state) benchmark::DoNotOptimize(arclen::leibniz_derivative(integral, 1.0));
}
BENCHMARK(BM_leibniz_derivative);

void BM_coth_fixed_point(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arclen::coth_fixed_point().root);
}
BENCHMARK(BM_coth_fixed_point);

void BM_solve_critical_equation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arclen::solve_critical_equation().root);
}
BENCHMARK(BM_solve_critical_equation);

void BM_maximize_arc_length_direct(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(arclen::maximize_arc_length_direct(kNatural).root);
}
BENCHMARK(BM_maximize_arc_length_direct)->Unit(benchmark::kMillisecond);

void BM_sweep_1000(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arclen::sweep({0.01, 1.56, 1000}, kNatural));
}
BENCHMARK(BM_sweep_1000)->Unit(benchmark::kMillisecond);

void BM_trajectory_family(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arclen::trajectory_family(kNatural, 101));
}
BENCHMARK(BM_trajectory_family);

void BM_write_sweep_csv_1000(benchmark::State& state) {
  const auto rows = arclen::sweep({0.01, 1.56, 1000}, kNatural);
  for (auto _ : state) {
    std::ostringstream out;
    arclen::write_sweep_csv(out, rows);
    benchmark::DoNotOptimize(out.str());
  }
}
BENCHMARK(BM_write_sweep_csv_1000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
