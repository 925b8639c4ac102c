// Serial vs OpenMP kernels on the three hot loops.

#include "shiftchaos/chaos.hpp"
#include "shiftchaos/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace shiftchaos;

namespace {

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Exec::Serial : kernels::Exec::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(kernels::max_threads()));
}

void BM_EigenResidual(benchmark::State& state) {
  const auto spec = OperatorSpec::unbounded_shift(IndexBase::One, Scalar(Rational(3, 2)));
  const Scalar lambda(Rational(5, 4));
  const FormulaSeq y = eigenvector(spec, lambda);
  for (auto _ : state) benchmark::DoNotOptimize(eigen_residual(spec, lambda, y, state.range(1), exec_of(state)));
  label(state);
}

void BM_PeriodicVerify(benchmark::State& state) {
  const ShiftSystem sys(OperatorSpec::bounded_shift(IndexBase::One, Scalar(2)));
  const FinSeq prefix(IndexBase::One, {{1, Scalar(1)}, {2, Scalar(Rational(-1, 3))}, {4, Scalar(2)}});
  for (auto _ : state) benchmark::DoNotOptimize(build_periodic_point(sys, prefix, 5, state.range(1), exec_of(state)));
  label(state);
}

void BM_BruteForceNorm(benchmark::State& state) {
  const auto spec = OperatorSpec::unbounded_shift(IndexBase::Zero, Scalar(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(opnorm_bruteforce(spec, PowerPath::Forward, 10, state.range(1), exec_of(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_EigenResidual)->ArgsProduct({{0, 1}, {200, 500}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PeriodicVerify)->ArgsProduct({{0, 1}, {200, 500}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceNorm)->ArgsProduct({{0, 1}, {100, 200}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
