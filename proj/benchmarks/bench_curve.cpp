#include <benchmark/benchmark.h>

#include "crowns/analysis.hpp"
#include "crowns/crown.hpp"
#include "crowns/curve.hpp"
#include "crowns/oracle.hpp"

namespace {

using namespace crowns;

void BM_CurveEvalH(benchmark::State& state) {
  const TwistedCurve& cv = curve_for(static_cast<int>(state.range(0)));
  double a = 0.73;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cv.h(a));
    a = a < 0.9 ? a + 1e-6 : 0.73;  // dodge constant folding
  }
}
BENCHMARK(BM_CurveEvalH)->Arg(10)->Arg(100)->Arg(1000)->Arg(5000);

void BM_ZeroPairScanVerified(benchmark::State& state) {
  AnalysisOptions opt;
  opt.scan_steps = 40000;  // off-default so every run bypasses the per-n memo
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeros_of_f(n, opt).z1);
  }
}
BENCHMARK(BM_ZeroPairScanVerified)->Arg(10)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SolveForMass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  zeros_of_f(n);  // warm the cache; measure the solve itself
  double m = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_for_mass(n, m).solutions.size());
    m = m < 50.0 ? m + 0.37 : 2.0;
  }
}
BENCHMARK(BM_SolveForMass)->Arg(3)->Arg(5)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_GradientOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CrownConfiguration crown{{RingSpec(n, 1.0, 1.0, Phase::nested()),
                                  RingSpec(n, 1.0, 1.0, Phase::twisted())}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_gradient_residual(crown).max_gradient_residual);
  }
}
BENCHMARK(BM_GradientOracle)->Arg(5)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
