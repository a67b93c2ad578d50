// Serial reference vs OpenMP kernels for curve and surface refinement.

#include <benchmark/benchmark.h>

#include <cmath>

#include "combsub/refine.hpp"

using namespace combsub;

namespace {

const SchemeSpec spec{2, Rational(-1, 2)};

template <class T>
Polygon<T> ring(std::size_t m) {
  std::vector<T> c;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = 2 * M_PI * static_cast<double>(i) / static_cast<double>(m);
    if constexpr (std::is_same_v<T, double>) {
      c.push_back(std::cos(t));
      c.push_back(std::sin(t));
    } else {
      c.push_back(Rational(static_cast<long>(std::lround(1000 * std::cos(t))), 1000));
      c.push_back(Rational(static_cast<long>(std::lround(1000 * std::sin(t))), 1000));
    }
  }
  return Polygon<T>(2, std::move(c), Topology::closed);
}

template <class T>
Grid<T> torus(std::size_t side) {
  std::vector<T> c;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      c.push_back(T(static_cast<long>(i)));
      c.push_back(T(static_cast<long>(j)));
      c.push_back(T(static_cast<long>((i * 7 + j * 3) % 5)));
    }
  }
  return Grid<T>(side, side, 3, std::move(c), Topology::closed, Topology::closed);
}

template <class T, Execution E>
void curve(benchmark::State& state) {
  const auto p = ring<T>(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(refine_curve(p, spec, {static_cast<int>(state.range(1)), E}));
}

template <class T, Execution E>
void surface(benchmark::State& state) {
  const auto g = torus<T>(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(refine_surface(g, spec, {static_cast<int>(state.range(1)), E}));
}

}  // namespace

BENCHMARK(curve<double, Execution::serial>)->Args({1024, 6});
BENCHMARK(curve<double, Execution::parallel>)->Args({1024, 6});
BENCHMARK(curve<Rational, Execution::serial>)->Args({64, 4});
BENCHMARK(curve<Rational, Execution::parallel>)->Args({64, 4});
BENCHMARK(surface<double, Execution::serial>)->Args({64, 3});
BENCHMARK(surface<double, Execution::parallel>)->Args({64, 3});
BENCHMARK(surface<Rational, Execution::serial>)->Args({16, 2});
BENCHMARK(surface<Rational, Execution::parallel>)->Args({16, 2});

BENCHMARK_MAIN();
