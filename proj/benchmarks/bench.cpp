#include <benchmark/benchmark.h>

#include <random>

#include "braidslice/arrangement.hpp"
#include "braidslice/charpoly.hpp"
#include "braidslice/errors.hpp"
#include "braidslice/lp.hpp"
#include "braidslice/ranking.hpp"
#include "braidslice/symmetry.hpp"

namespace bs = braidslice;

namespace {

bs::RatVec generic_direction(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-40, 40);
  while (true) {
    bs::RatVec v;
    bs::Rat sum;
    for (int i = 0; i + 1 < m; ++i) {
      v.emplace_back(coord(rng));
      sum += v.back();
    }
    v.push_back(-sum);
    try {
      bs::require_generic_direction(v);
      return v;
    } catch (const bs::DegenerateDirection&) {
    }
  }
}

void BM_CountPoints(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const bs::ArrangementSpec spec{m, false, false};
  const std::uint64_t q = 101;
  for (auto _ : state) benchmark::DoNotOptimize(bs::count_points(spec, q).count);
}
BENCHMARK(BM_CountPoints)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Charpoly(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bs::charpoly({m, false, false}));
}
BENCHMARK(BM_Charpoly)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bs::enumerate_chambers({m, false, false}).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_RankingPattern(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const bs::RatVec v = generic_direction(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bs::ranking_pattern(v).excluded().size());
}
BENCHMARK(BM_RankingPattern)->DenseRange(4, 7);

void BM_CanonicalForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const bs::SignVector s = bs::sign_of_point({m, false, false}, generic_direction(m, rng));
  for (auto _ : state) benchmark::DoNotOptimize(bs::canonical_form(s));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 7);

void BM_RealizeChamber(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const bs::ArrangementSpec spec{m, false, false};
  std::mt19937_64 rng(3);
  const bs::SignVector s = bs::sign_of_point(spec, generic_direction(m, rng));
  for (auto _ : state) benchmark::DoNotOptimize(bs::realize(spec, s).has_value());
}
BENCHMARK(BM_RealizeChamber)->DenseRange(4, 6);

}  // namespace

BENCHMARK_MAIN();
