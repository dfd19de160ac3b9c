#include <benchmark/benchmark.h>

#include "mf24/etafunc.hpp"
#include "mf24/spaces.hpp"
#include "mf24/theta.hpp"

using namespace mf24;

static void BM_SeriesMultiply(benchmark::State& state) {
  const int prec = static_cast<int>(state.range(0));
  const QSeries a = eta_series(1, prec);
  const QSeries b = eta_series(2, prec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_SeriesMultiply)->Arg(61)->Arg(201)->Arg(1001);

static void BM_EtaQuotientExpansion(benchmark::State& state) {
  const EtaQuotient f = EtaQuotient::from_vector({-1, 4, -1, -5, -2, 2, 9, -2});
  const int prec = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eta_quotient_series(f, prec));
  }
}
BENCHMARK(BM_EtaQuotientExpansion)->Arg(61)->Arg(201);

static void BM_ThetaProduct(benchmark::State& state) {
  const ThetaProductSpec s({1, 2, 3, 6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_product_series(s, 501));
  }
}
BENCHMARK(BM_ThetaProduct);

static void BM_SolveInBasis(benchmark::State& state) {
  const QSeries target = theta_product_series(ThetaProductSpec({1, 1, 3, 3}), 61);
  const SpaceId space{CharacterLabel::chi1, Subspace::M};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_in_basis(target, space));
  }
}
BENCHMARK(BM_SolveInBasis);
