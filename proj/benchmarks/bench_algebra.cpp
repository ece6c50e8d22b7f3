#include <benchmark/benchmark.h>

#include <random>

#include "dehnkit/free_group.hpp"
#include "dehnkit/matrix.hpp"

using namespace dehnkit;

namespace {

FreeWord random_word(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> gen(0, 3), sign(0, 1);
  FreeWord w;
  for (int i = 0; i < length; ++i) w.push_back({GenId{static_cast<std::uint32_t>(gen(rng))}, sign(rng) ? 1 : -1});
  return w;
}

void BM_Reduce(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto w = random_word(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(w));
}
BENCHMARK(BM_Reduce)->Range(16, 4096);

void BM_FoxDerivativeGroupRing(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto w = random_word(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fox_derivative(w, GenId{0}));
}
BENCHMARK(BM_FoxDerivativeGroupRing)->Range(16, 512);

void BM_FoxDerivativeSpecialized(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto w = random_word(rng, static_cast<int>(state.range(0)));
  Specialization m({LaurentPoly::variable(1, 0), LaurentPoly::constant(1, 1), LaurentPoly::variable(1, 0, -1),
                    LaurentPoly::constant(1, 1)});
  for (auto _ : state) benchmark::DoNotOptimize(m.fox(w, GenId{0}));
}
BENCHMARK(BM_FoxDerivativeSpecialized)->Range(16, 512);

void BM_BareissDeterminant(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> v(-9, 9);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v(rng);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_BareissDeterminant)->RangeMultiplier(2)->Range(4, 64);

void BM_LaurentDeterminant(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> v(-3, 3);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n, 0), b(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = v(rng);
      b(i, j) = v(rng);
    }
  auto m = minus_t_times(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_LaurentDeterminant)->DenseRange(4, 16, 4);

}  // namespace
