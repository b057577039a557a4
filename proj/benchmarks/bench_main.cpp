#include <benchmark/benchmark.h>

#include <numbers>

#include "wedge/amplitude.hpp"
#include "wedge/fields.hpp"
#include "wedge/kernels.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

wedge::WedgeScene reference() {
  return wedge::derive(kPi / 2.0, kPi / 4.0, 1.0);
}

void BM_KernelEval(benchmark::State& state) {
  const wedge::WedgeScene s = reference();
  double b = 0.0;
  for (auto _ : state) {
    b += 1e-6;
    benchmark::DoNotOptimize(wedge::z_nn(s, {b, 0.0}, kPi));
  }
}
BENCHMARK(BM_KernelEval);

void BM_DiffractedWave(benchmark::State& state) {
  const wedge::WedgeScene s = reference();
  const wedge::Profile prof = wedge::Profile::ramp(0.5);
  wedge::QuadratureSpec spec;
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge::u_d(s, prof, {1.0, kPi}, t, spec));
  }
}
BENCHMARK(BM_DiffractedWave)->Arg(2)->Arg(8)->Arg(32);

void BM_SpectralIntegral(benchmark::State& state) {
  const wedge::WedgeScene s = reference();
  wedge::QuadratureSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge::j_d(s, {1.0, kPi}, {1.0, 0.0},
                                        wedge::Representation::RealLine, spec));
  }
}
BENCHMARK(BM_SpectralIntegral);

void BM_LimitingAmplitude(benchmark::State& state) {
  const wedge::WedgeScene s = reference();
  wedge::QuadratureSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge::a_components(s, {1.0, kPi}, spec));
  }
}
BENCHMARK(BM_LimitingAmplitude);

}  // namespace

BENCHMARK_MAIN();
