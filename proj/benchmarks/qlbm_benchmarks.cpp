#include <qlbm/classical_lbm.hpp>
#include <qlbm/coefficients.hpp>
#include <qlbm/qlb_operators.hpp>
#include <qlbm/statevector.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

namespace {

using namespace qlbm;

// Square D2Q9 periodic grid with side state.range(0), sheared so every population differs.
PdfField sheared_field(int side) {
  const LatticeModel lattice = make_lattice(LatticeKind::D2Q9);
  const Grid grid = make_grid_2d(side, side, Boundary::periodic);
  PdfField f(lattice, grid);
  for (int i = 0; i < lattice.n_e; ++i)
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) {
        const double ux = 0.05 * std::cos(2.0 * std::numbers::pi * y / side);
        const double uy = 0.03 * std::cos(2.0 * std::numbers::pi * x / side);
        f(i, x, y) = lattice.weight(i) *
                     (1.0 + 3.0 * (ux * lattice.velocities[i][0] + uy * lattice.velocities[i][1]));
      }
  return f;
}

void BM_ClassicalBgkStep(benchmark::State& state) {
  PdfField f = sheared_field(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    f = step(f, 0.8, CollisionMode::bgk);
    benchmark::DoNotOptimize(f.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.n_f()));
}
BENCHMARK(BM_ClassicalBgkStep)->RangeMultiplier(2)->Range(16, 128);

void BM_ClassicalLinearQuadraticStep(benchmark::State& state) {
  PdfField f = sheared_field(static_cast<int>(state.range(0)));
  const BetaTensor b = beta(alpha(f.lattice()), 0.8);
  for (auto _ : state) {
    f = step(f, b, CollisionMode::quadratic_linear);
    benchmark::DoNotOptimize(f.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.n_f()));
}
BENCHMARK(BM_ClassicalLinearQuadraticStep)->RangeMultiplier(2)->Range(16, 128);

void BM_BuildPlan(benchmark::State& state) {
  const PdfField f = sheared_field(static_cast<int>(state.range(0)));
  const BetaTensor b = beta(alpha(f.lattice()), 0.8);
  const auto df = augmented_vector(f);
  for (auto _ : state) {
    auto plan = build_plan(f.lattice(), f.grid(), b, df, PlanVariant::layout_a);
    benchmark::DoNotOptimize(plan.operators.data());
  }
}
BENCHMARK(BM_BuildPlan)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_ApplyPlan(benchmark::State& state) {
  const PdfField f = sheared_field(static_cast<int>(state.range(0)));
  const BetaTensor b = beta(alpha(f.lattice()), 0.8);
  const auto plan = build_plan(f.lattice(), f.grid(), b, augmented_vector(f), PlanVariant::layout_a);
  const QlbState s0 = encode(f);
  for (auto _ : state) {
    QlbState s = qlbm::apply(s0, plan);
    benchmark::DoNotOptimize(s.amplitudes.data());
  }
}
BENCHMARK(BM_ApplyPlan)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_EmulatedStep(benchmark::State& state) {
  const PdfField f = sheared_field(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = run(f, 0.8, 1, PlanVariant::layout_a);
    benchmark::DoNotOptimize(r.field.values().data());
  }
}
BENCHMARK(BM_EmulatedStep)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
