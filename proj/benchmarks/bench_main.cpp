#include <benchmark/benchmark.h>

#include "liecone/catalog.hpp"
#include "liecone/geometry.hpp"
#include "liecone/nullcone.hpp"

namespace {

using namespace liecone;

void BM_Curvature(benchmark::State& state, const std::string& name) {
  auto e = catalog::get(name);
  for (auto _ : state) benchmark::DoNotOptimize(compute_curvature(e.mu, e.metric(), 1));
}
BENCHMARK_CAPTURE(BM_Curvature, case21a, std::string("case21a-sl2-n31"));
BENCHMARK_CAPTURE(BM_Curvature, sl3_o55, std::string("sl3R-o55"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Curvature, sl3_o66, std::string("sl3R-o66"))->Unit(benchmark::kMillisecond);

void BM_Feasibility(benchmark::State& state, const std::string& name) {
  auto e = catalog::get(name);
  BoostSupport s = support(e.mu, e.doc.p, e.doc.k);
  for (auto _ : state) benchmark::DoNotOptimize(case_feasibility(s, e.doc.p));
}
BENCHMARK_CAPTURE(BM_Feasibility, case311, std::string("case311-sl2-R2"));
BENCHMARK_CAPTURE(BM_Feasibility, sl3_o66, std::string("sl3R-o66"));

void BM_Membership(benchmark::State& state, const std::string& name) {
  auto e = catalog::get(name);
  for (auto _ : state) benchmark::DoNotOptimize(membership_with_permutations(e.mu, e.metric()));
}
BENCHMARK_CAPTURE(BM_Membership, case311, std::string("case311-sl2-R2"));
BENCHMARK_CAPTURE(BM_Membership, sl3_o66, std::string("sl3R-o66"))->Unit(benchmark::kMillisecond);

void BM_UniversalityOrder(benchmark::State& state) {
  WeightVector x{3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(universality_order(x, 2, 1));
}
BENCHMARK(BM_UniversalityOrder);

}  // namespace

BENCHMARK_MAIN();
