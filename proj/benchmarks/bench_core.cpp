#include <benchmark/benchmark.h>

#include "qca/analysis.hpp"
#include "qca/lie_engine.hpp"
#include "qca/models.hpp"
#include "qca/sim.hpp"

namespace {

// Closure from two generic generators, which saturates at u(n) or su(n).
void BM_ClosureGeneric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qca::ComplexMatrix u = qca::haar_random_unitary(n, 3);
  const qca::ComplexMatrix v = qca::haar_random_unitary(n, 4);
  const qca::ComplexMatrix::Scalar i{0.0, 1.0};
  std::vector<qca::ComplexMatrix> gens{
      qca::skew_project(u), qca::skew_project(i * (v + v.adjoint()))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qca::lie_closure(gens).dim());
  }
}
BENCHMARK(BM_ClosureGeneric)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_AnalyzeTwoSpin(benchmark::State& state) {
  const qca::SystemModel m = qca::two_spin(1.0, 1.0, 1.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qca::analyze(m).dim_l);
  }
}
BENCHMARK(BM_AnalyzeTwoSpin)->Unit(benchmark::kMillisecond);

void BM_Propagate(benchmark::State& state) {
  const qca::SystemModel m = qca::two_spin(1.0, 1.0, 1.1);
  const qca::PulseSequence p =
      qca::random_pulses(m.num_controls(), static_cast<int>(state.range(0)), 11, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qca::propagate_operator(m, p));
  }
}
BENCHMARK(BM_Propagate)->RangeMultiplier(4)->Range(1, 256);

}  // namespace

BENCHMARK_MAIN();
