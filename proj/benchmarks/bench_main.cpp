#include <benchmark/benchmark.h>

#include "predual/prng.hpp"
#include "predual/stability.hpp"

using namespace predual;

namespace {

HyperplaneSpec bench_spec(int n) {
  SummableSeq alpha;
  for (int i = 1; i <= n; ++i) alpha.set(i, Rational(i % 2 ? 1 : -1, 2 * n));
  return HyperplaneSpec::renormed(alpha, n);
}

void BM_DualNormClosedForm(benchmark::State& state) {
  const auto spec = bench_spec(static_cast<int>(state.range(0)));
  SplitMix64 g(kDefaultSeed);
  std::vector<SummableSeq> fs;
  for (int i = 0; i < 64; ++i) fs.push_back(random_functional(g, 8, 6));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_norm_n(spec, fs[i++ & 63]));
  }
}
BENCHMARK(BM_DualNormClosedForm)->Arg(1)->Arg(3);

void BM_BallVertices(benchmark::State& state) {
  const auto spec = bench_spec(1);
  const auto space = TruncatedSpace::primal_truncation(spec, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball_vertices(space));
  }
}
BENCHMARK(BM_BallVertices)->Arg(3)->Arg(4)->Arg(5);

void BM_DualNormOracle(benchmark::State& state) {
  const auto spec = bench_spec(1);
  const auto vertices = ball_vertices(TruncatedSpace::primal_truncation(spec, 5));
  SplitMix64 g(kDefaultSeed);
  std::vector<SummableSeq> fs;
  for (int i = 0; i < 64; ++i) fs.push_back(random_functional(g, 5, 4));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_pairing_over(vertices, fs[i++ & 63]));
  }
}
BENCHMARK(BM_DualNormOracle);

void BM_KrasnoselskiiOrbit(benchmark::State& state) {
  const auto spec = bench_spec(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        krasnoselskii_orbit(spec, SimplexPoint::at_estar(), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_KrasnoselskiiOrbit)->Arg(25)->Arg(100);

void BM_BmUpperC0(benchmark::State& state) {
  const SummableSeq alpha = SummableSeq::basis(1);
  const auto family = default_family(alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm_upper_c0(alpha, static_cast<int>(state.range(0)), family));
  }
}
BENCHMARK(BM_BmUpperC0)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
