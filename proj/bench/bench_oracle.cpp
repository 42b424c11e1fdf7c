// Serial reference against the OpenMP kernels. Run with OMP_NUM_THREADS set
// to compare thread counts; both variants produce bit-identical sums.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "kahler/expr.hpp"
#include "kahler/meromorphic.hpp"
#include "kahler/oracle.hpp"
#include "kahler/oracle_kernels.hpp"

namespace {

using namespace kahler;

const MeromorphicFunction& integrand() {
  static const MeromorphicFunction f = to_meromorphic(parse("(z^3 + 2*z - I)/((z^2+1)^2*(z-0.5)^3)"));
  return f;
}

void circle(benchmark::State& state, Execution ex) {
  const auto form = real_form(integrand());
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::circle_nodes(ex, form.k, form.g, {0.0, 1.0}, 0.4, n, 0, 1, n));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

std::vector<kernels::Panel> unit_panels(int count, double tol) {
  std::vector<kernels::Panel> panels;
  for (int i = 0; i < count; ++i) {
    const double lo = -0.5 * count + i;
    panels.push_back({lo, lo + 1.0, tol});
  }
  return panels;
}

void simpson(benchmark::State& state, Execution ex) {
  const auto panels = unit_panels(static_cast<int>(state.range(0)), 1e-13);
  const kernels::LineFunction h = [](double x) { return std::cos(3.0 * x) / (x * x + 1.0); };
  for (auto _ : state) benchmark::DoNotOptimize(kernels::simpson_panels(ex, h, panels));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

void BM_CircleSerial(benchmark::State& s) { circle(s, Execution::serial); }
void BM_CircleParallel(benchmark::State& s) { circle(s, Execution::parallel); }
void BM_SimpsonSerial(benchmark::State& s) { simpson(s, Execution::serial); }
void BM_SimpsonParallel(benchmark::State& s) { simpson(s, Execution::parallel); }

BENCHMARK(BM_CircleSerial)->RangeMultiplier(8)->Range(1 << 10, 1 << 19)->UseRealTime();
BENCHMARK(BM_CircleParallel)->RangeMultiplier(8)->Range(1 << 10, 1 << 19)->UseRealTime();
BENCHMARK(BM_SimpsonSerial)->RangeMultiplier(8)->Range(64, 1 << 15)->UseRealTime();
BENCHMARK(BM_SimpsonParallel)->RangeMultiplier(8)->Range(64, 1 << 15)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
