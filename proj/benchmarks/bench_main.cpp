#include <benchmark/benchmark.h>

#include "lpadm/analyzer.hpp"
#include "lpadm/catalog.hpp"
#include "lpadm/criteria.hpp"
#include "lpadm/oracle.hpp"

using namespace lpadm;

namespace {

const SystemDescriptor& heat() {
  static const SystemDescriptor s = catalog_system("heat1d-dirichlet");
  return s;
}

const HalfPlaneMeasure& heat_measure() {
  static const HalfPlaneMeasure mu = build_measure(heat());
  return mu;
}

void BM_BuildMeasure(benchmark::State& st) {
  const MeasureOptions opts{.k_max = st.range(0)};
  for (auto _ : st) benchmark::DoNotOptimize(build_measure(heat(), opts));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_BuildMeasure)->RangeMultiplier(10)->Range(1000, 1'000'000)->Unit(benchmark::kMillisecond);

void BM_StripMasses(benchmark::State& st) {
  const auto& mu = heat_measure();
  for (auto _ : st) benchmark::DoNotOptimize(strip_masses(mu));
}
BENCHMARK(BM_StripMasses)->Unit(benchmark::kMicrosecond);

void BM_SquareCriterion(benchmark::State& st) {
  const auto& mu = heat_measure();
  for (auto _ : st) benchmark::DoNotOptimize(carleson_square_criterion(mu, 1.5, 2.0));
}
BENCHMARK(BM_SquareCriterion)->Unit(benchmark::kMillisecond);

void BM_ResolventProfile(benchmark::State& st) {
  const auto& mu = heat_measure();
  for (auto _ : st) benchmark::DoNotOptimize(resolvent_profile(mu, 2.0));
}
BENCHMARK(BM_ResolventProfile)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& st) {
  const auto& s = std::get<DiagonalSystem>(heat().system);
  for (auto _ : st) benchmark::DoNotOptimize(sobolev_membership(s, 0.8));
}
BENCHMARK(BM_Membership)->Unit(benchmark::kMillisecond);

// one p after the caches are warm
void BM_AnalyzeCached(benchmark::State& st) {
  Analyzer a(heat());
  a.analyze(5.0);
  double p = 2.5;
  for (auto _ : st) {
    benchmark::DoNotOptimize(a.analyze(p));
    p = p > 7.0 ? 2.5 : p + 0.37;
  }
}
BENCHMARK(BM_AnalyzeCached)->Unit(benchmark::kMicrosecond);

void BM_ThresholdScan(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(threshold_scan(heat(), 2.0, 8.0, 0.02));
}
BENCHMARK(BM_ThresholdScan)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_OracleProfile(benchmark::State& st) {
  const auto& s = std::get<DiagonalSystem>(heat().system);
  const auto times = dyadic_times(double(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(constant_growth_profile(s, 5.0, times));
}
BENCHMARK(BM_OracleProfile)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_WeissTruncatedSum(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(weiss_truncated_sum(1.0));
}
BENCHMARK(BM_WeissTruncatedSum)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
