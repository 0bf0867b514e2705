#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "splq/engine.hpp"
#include "splq/orthopoly.hpp"
#include "splq/realline.hpp"
#include "splq/splinecheck.hpp"

using namespace splq;

namespace {

partition random_partition(int s, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-std::log(2.0), std::log(2.0));
  std::vector<double> l(s);
  for (auto& v : l) v = std::exp(u(rng));
  return partition(l);
}

void BM_C0FullRandom(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), s = static_cast<int>(st.range(1));
  const auto p = random_partition(s, 7);
  const rule_request req{0, n, rule_family::full, (s + 1) / 2, {}};
  for (auto _ : st) benchmark::DoNotOptimize(generate(req, p));
}
BENCHMARK(BM_C0FullRandom)->Args({2, 8})->Args({4, 8})->Args({4, 40})->Args({8, 40});

void BM_C1FullFixture(benchmark::State& st) {
  const partition p(0, 9, {1, 2, 3, 1, 1, 1});
  const rule_request req{1, 1, rule_family::full, 3, {}};
  for (auto _ : st) benchmark::DoNotOptimize(generate(req, p));
}
BENCHMARK(BM_C1FullFixture);

void BM_C0HalfPinned(benchmark::State& st) {
  const partition p(0, 9, {1, 2, 3, 1, 1, 1});
  const rule_request req{0, 2, rule_family::half, 3, free_parameter::pin(3.0)};
  for (auto _ : st) benchmark::DoNotOptimize(generate(req, p));
}
BENCHMARK(BM_C0HalfPinned);

void BM_RealRootsLegendre(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const auto f = [m](double x) { return eval(poly_family::legendre, m, x); };
  for (auto _ : st) benchmark::DoNotOptimize(real_roots(f, m));
}
BENCHMARK(BM_RealRootsLegendre)->Arg(4)->Arg(10)->Arg(20);

void BM_Residuals(benchmark::State& st) {
  const auto p = random_partition(20, 3);
  const auto r = generate({0, 3, rule_family::full, 10, {}}, p);
  const spline_space sp{r.meta.degree, 0, p.a(), p.b(), p.inner_knots()};
  for (auto _ : st) benchmark::DoNotOptimize(residuals(r, sp));
}
BENCHMARK(BM_Residuals);

void BM_FixedPointC1(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fixed_point(1, sweep_mode::full, 4));
}
BENCHMARK(BM_FixedPointC1);

}  // namespace
BENCHMARK_MAIN();
