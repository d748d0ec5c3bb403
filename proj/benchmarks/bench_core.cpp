// Micro benchmarks for the hot paths: polynomial gcd, function-field
// multiplication, exact rank, and the full mu2 rank pipeline on a small
// curve. Wall times here are informational; correctness lives in tests/.

#include <benchmark/benchmark.h>

#include "gaussmap/gaussian.hpp"
#include "gaussmap/matrix.hpp"

namespace {

using namespace gaussmap;

UniPoly dense_poly(std::size_t degree, long seed) {
  std::vector<Rational> c(degree + 1);
  std::uint64_t state = static_cast<std::uint64_t>(seed) * 6364136223846793005ull + 1442695040888963407ull;
  for (auto& q : c) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    q = Rational(static_cast<long>(state % 19) - 9);
  }
  if (c[degree] == 0) c[degree] = 1;
  return UniPoly(std::move(c));
}

void BM_PolyGcd(benchmark::State& state) {
  const auto deg = static_cast<std::size_t>(state.range(0));
  UniPoly g = dense_poly(deg / 4 + 1, 7);
  UniPoly a = dense_poly(deg, 1) * g;
  UniPoly b = dense_poly(deg, 2) * g;
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_gcd(a, b));
  }
}
BENCHMARK(BM_PolyGcd)->Arg(16)->Arg(48);

void BM_FFMul(benchmark::State& state) {
  CurvePtr curve = CurveModel::superelliptic(
      3, UniPoly::monomial(10) - UniPoly::constant(1));
  std::vector<RatFunc> ca, cb;
  for (long b = 0; b < 3; ++b) {
    ca.emplace_back(dense_poly(6, 11 + b));
    cb.emplace_back(dense_poly(6, 17 + b));
  }
  FFElement a(curve, ca), b(curve, cb);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_FFMul);

void BM_ExactRank(benchmark::State& state) {
  const auto nn = static_cast<std::size_t>(state.range(0));
  RatMatrix m(nn, nn + 4);
  std::uint64_t s = 99;
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn + 4; ++j) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      m.at(i, j) = Rational(static_cast<long>(s % 41) - 20, 1 + (s >> 60));
      m.at(i, j).canonicalize();
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_ExactRank)->Arg(12)->Arg(24);

void BM_RankMu2SmallCurve(benchmark::State& state) {
  CurvePtr curve = CurveModel::superelliptic(
      2, UniPoly::monomial(10) - UniPoly::constant(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_mu2(curve).rank);
  }
}
BENCHMARK(BM_RankMu2SmallCurve);

}  // namespace

BENCHMARK_MAIN();
