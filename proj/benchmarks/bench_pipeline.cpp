#include <benchmark/benchmark.h>

#include <random>

#include "dehnkit/builders.hpp"
#include "dehnkit/invariants.hpp"

using namespace dehnkit;

namespace {

LinkDiagram sample(int crossings) {
  std::mt19937_64 rng(1234);
  return random_special_alternating(rng, crossings);
}

void BM_ParseAndShade(benchmark::State& state) {
  const std::string pd = sample(static_cast<int>(state.range(0))).to_pd();
  for (auto _ : state) {
    auto d = parse_pd(pd);
    benchmark::DoNotOptimize(shade(d));
  }
}
BENCHMARK(BM_ParseAndShade)->RangeMultiplier(2)->Range(8, 128);

void BM_GoeritzDirect(benchmark::State& state) {
  auto d = sample(static_cast<int>(state.range(0)));
  auto s = shade(d);
  for (auto _ : state) benchmark::DoNotOptimize(goeritz_direct(d, s));
}
BENCHMARK(BM_GoeritzDirect)->RangeMultiplier(2)->Range(8, 128);

void BM_MainPresentationJacobianNu(benchmark::State& state) {
  auto d = sample(static_cast<int>(state.range(0)));
  auto s = shade(d);
  CheckerboardGraph g(d, s);
  for (auto _ : state) {
    auto p = theorem_main_presentation(d, s, g);
    benchmark::DoNotOptimize(jacobian_nu(p, region_alpha(p, s)));
  }
}
BENCHMARK(BM_MainPresentationJacobianNu)->RangeMultiplier(2)->Range(8, 128);

void BM_SeifertFromWords(benchmark::State& state) {
  auto d = sample(static_cast<int>(state.range(0)));
  auto s = shade(d);
  CheckerboardGraph g(d, s);
  if (!is_special(s)) {
    state.SkipWithError("sample diagram not special");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(seifert_from_words(d, s, g));
}
BENCHMARK(BM_SeifertFromWords)->RangeMultiplier(2)->Range(8, 64);

void BM_AlexanderMain(benchmark::State& state) {
  auto d = sample(static_cast<int>(state.range(0)));
  auto s = shade(d);
  CheckerboardGraph g(d, s);
  for (auto _ : state) benchmark::DoNotOptimize(main_alexander(d, s, g));
}
BENCHMARK(BM_AlexanderMain)->DenseRange(8, 24, 8);

void BM_AlexanderWirtinger(benchmark::State& state) {
  auto d = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wirtinger_alexander(d));
}
BENCHMARK(BM_AlexanderWirtinger)->DenseRange(8, 24, 8);

}  // namespace
