#include <benchmark/benchmark.h>

#include "fano/cubic.hpp"
#include "fano/quintic.hpp"
#include "fano/sampling.hpp"

using namespace fano;

static void BM_QuinticTableVerification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quintic::verify_tables_quintic().all_passed());
}
BENCHMARK(BM_QuinticTableVerification)->Unit(benchmark::kMillisecond);

static void BM_CubicTableVerification(benchmark::State& state) {
  Sampler s(11);
  const cubic::CubicForm f = s.cubic();
  for (auto _ : state) benchmark::DoNotOptimize(cubic::verify_bracket_table_chart(f).all_passed());
}
BENCHMARK(BM_CubicTableVerification)->Unit(benchmark::kMillisecond);

static void BM_QuinticCohomology(benchmark::State& state) {
  Sampler s(12);
  const So7Coeffs a = quintic::conic_embed(s.conic_point());
  for (auto _ : state) benchmark::DoNotOptimize(quintic::cohomology_dims_quintic(a).dims);
}
BENCHMARK(BM_QuinticCohomology)->Unit(benchmark::kMillisecond);

static void BM_CubicCohomology(benchmark::State& state) {
  Sampler s(13);
  const cubic::CubicForm f = cubic::CubicForm::fermat();
  const So5Coeffs a = s.decomposable_so5();
  for (auto _ : state) benchmark::DoNotOptimize(cubic::cohomology_dims_cubic(f, a).dims);
}
BENCHMARK(BM_CubicCohomology)->Unit(benchmark::kMicrosecond);

static void BM_RankRandomSquare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Sampler s(14);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = s.rational();
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRandomSquare)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_PolynomialProduct(benchmark::State& state) {
  Sampler s(15);
  const auto vars = homogeneous_range(5);
  const Polynomial p = s.polynomial(vars, 4, 30), q = s.polynomial(vars, 4, 30);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolynomialProduct)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
