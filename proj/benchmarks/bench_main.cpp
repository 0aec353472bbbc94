#include <benchmark/benchmark.h>

#include <random>

#include "milnor/chow_model.hpp"
#include "milnor/cycles.hpp"
#include "milnor/equivariant.hpp"
#include "milnor/ranks.hpp"

using namespace milnor;

static Polynomial random_poly(std::mt19937_64& rng, int nvars, int terms, int degree) {
  std::uniform_int_distribution<int> e(0, degree), c(-50, 50);
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> ex(nvars);
    for (auto& x : ex) x = e(rng);
    p += Polynomial::monomial(nvars, Monomial::from_exponents(ex.data(), nvars), c(rng));
  }
  return p;
}

static void BM_PolynomialMultiply(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto a = random_poly(rng, 6, static_cast<int>(state.range(0)), 4);
  auto b = random_poly(rng, 6, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(10)->Arg(50)->Arg(200);

static void BM_PolynomialGcd(benchmark::State& state) {
  std::mt19937_64 rng(11);
  auto g = random_poly(rng, 4, 6, 2);
  auto a = g * random_poly(rng, 4, 6, 2);
  auto b = g * random_poly(rng, 4, 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd);

static void BM_GammaSelfPairing(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto g = gamma(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pairing(g, g));
}
BENCHMARK(BM_GammaSelfPairing)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_TopDegreeX(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto h = lift_h(n);
  auto H = lift_H(n);
  auto c = multiply(power(h, n - 1), power(H, n - 2));
  auto one = EquivariantClass::constant(c.graph_ptr(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pairing(c, one));
}
BENCHMARK(BM_TopDegreeX)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ChowRanks(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto model = static_cast<RankModel>(state.range(1));
  auto g = shared_graph(n, Variety::Y);
  for (auto _ : state) benchmark::DoNotOptimize(chow_ranks(*g, g->dimension(), {model, RankField::Rational, 1}));
}
BENCHMARK(BM_ChowRanks)
    ->Args({4, static_cast<int>(RankModel::Full)})
    ->Args({5, static_cast<int>(RankModel::Full)})
    ->Args({5, static_cast<int>(RankModel::GenericPlane)})
    ->Args({6, static_cast<int>(RankModel::GenericPlane)})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
