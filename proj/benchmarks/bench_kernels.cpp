#include <benchmark/benchmark.h>

#include "slr/greens.hpp"
#include "slr/lattice_sum.hpp"
#include "slr/pump_probe.hpp"

namespace {

void bm_greens(benchmark::State& state) {
  const slr::Vec3 r(310.0, 40.0, -25.0);
  double w = 2.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(slr::greens_free_space(r, w));
    w += 1e-9; // defeat caching of the argument
  }
}
BENCHMARK(bm_greens);

void bm_lattice_sum(benchmark::State& state) {
  slr::LatticeSpec lattice{550.0, static_cast<int>(state.range(0))};
  slr::ParticleSpec particle{2.4796839679, 0.5};
  double w = 2.23;
  for (auto _ : state) {
    benchmark::DoNotOptimize(slr::lattice_sum_self(lattice, particle, 0.0, w));
    w += 1e-9;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_lattice_sum)->Arg(100)->Arg(1000)->Arg(8000)->Complexity(benchmark::oN);

slr::Line random_line(int n) {
  slr::Line l{{-0.5, 1e-3, n}, std::vector<slr::cd>(n)};
  unsigned s = 12345;
  for (auto& x : l.v) {
    s = s * 1664525u + 1013904223u;
    x = slr::cd((s >> 8) * 1e-9, (s >> 16) * 1e-9);
  }
  return l;
}

void bm_convolve_direct(benchmark::State& state) {
  const auto a = random_line(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(slr::convolve(a, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_convolve_direct)->Arg(256)->Arg(1024)->Arg(4096)->Complexity(benchmark::oNSquared);

void bm_convolve_fft(benchmark::State& state) {
  const auto a = random_line(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(slr::convolve_fft(a, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_convolve_fft)->Arg(256)->Arg(1024)->Arg(4096)->Complexity(benchmark::oNLogN);

} // namespace

BENCHMARK_MAIN();
