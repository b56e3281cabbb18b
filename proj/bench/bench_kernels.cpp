#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "qcircle/circle_state.hpp"
#include "qcircle/kernels.hpp"
#include "qcircle/uncertainty.hpp"

using namespace qcircle;

namespace {

std::vector<double> grid(std::size_t n) {
  std::vector<double> phi(n);
  for (std::size_t j = 0; j < n; ++j) phi[j] = 2.0 * std::numbers::pi * j / n;
  return phi;
}

void BM_Density(benchmark::State& st, bool parallel) {
  const auto s = CircleState::random(static_cast<int>(st.range(1)), 7);
  const auto phi = grid(static_cast<std::size_t>(st.range(0)));
  std::vector<double> out(phi.size());
  for (auto _ : st) {
    if (parallel) kernels::density_at(s, phi, out);
    else kernels::density_at_serial(s, phi, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(phi.size()));
}

void BM_Moments(benchmark::State& st, bool parallel) {
  const auto s = CircleState::random(8, 11);
  const auto intervals = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    auto m = parallel ? kernels::simpson_moments(s, 0.3, intervals)
                      : kernels::simpson_moments_serial(s, 0.3, intervals);
    benchmark::DoNotOptimize(m);
  }
}

void BM_Sweep(benchmark::State& st, bool parallel) {
  SweepSpec spec;
  spec.count = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    auto sum = parallel ? sweep_random_states(spec) : sweep_random_states_serial(spec);
    benchmark::DoNotOptimize(sum);
  }
}

void BM_Dft(benchmark::State& st, bool fft) {
  std::vector<kernels::cplx> x(static_cast<std::size_t>(st.range(0)));
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = {std::cos(0.1 * j), std::sin(0.37 * j)};
  for (auto _ : st) {
    auto y = fft ? kernels::forward_dft(x) : kernels::forward_dft_direct(x);
    benchmark::DoNotOptimize(y.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Density, serial, false)->Args({1 << 16, 8})->Args({1 << 16, 64});
BENCHMARK_CAPTURE(BM_Density, openmp, true)->Args({1 << 16, 8})->Args({1 << 16, 64});
BENCHMARK_CAPTURE(BM_Moments, serial, false)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_Moments, openmp, true)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_Sweep, serial, false)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, openmp, true)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Dft, fftw, true)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(BM_Dft, direct, false)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
