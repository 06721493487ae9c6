#include <benchmark/benchmark.h>

#include <sstream>

#include "asrt/complexity.hpp"
#include "asrt/io.hpp"
#include "asrt/trees.hpp"
#include "asrt/vectors.hpp"

namespace {

void BM_BuildSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asrt::DivisorSieve(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildSieve)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_BuildTable(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  const asrt::DivisorSieve sieve(limit);
  for (auto _ : state) benchmark::DoNotOptimize(asrt::build_table(limit, sieve));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildTable)->Arg(10'000)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_CountVectors(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const asrt::DivisorSieve sieve(n);
  for (auto _ : state) benchmark::DoNotOptimize(asrt::count_vectors(n, sieve));
}
BENCHMARK(BM_CountVectors)->Arg(100)->Arg(500)->Arg(1000);

void BM_InclusionExclusion(benchmark::State& state) {
  constexpr std::uint64_t kLimit = 100'000;
  static const asrt::DivisorSieve sieve(kLimit);
  static const asrt::ComplexityTable table = asrt::build_table(kLimit, sieve);
  for (auto _ : state) {
    for (std::uint64_t n = 2; n <= kLimit; n += 97) {
      benchmark::DoNotOptimize(asrt::t_star_inclusion_exclusion(table, sieve, n));
    }
  }
}
BENCHMARK(BM_InclusionExclusion);

void BM_CacheRoundTrip(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  const asrt::DivisorSieve sieve(limit);
  const asrt::ComplexityTable table = asrt::build_table(limit, sieve);
  for (auto _ : state) {
    std::stringstream buffer;
    asrt::io::write_cache(table, buffer);
    benchmark::DoNotOptimize(asrt::io::read_cache(buffer));
  }
}
BENCHMARK(BM_CacheRoundTrip)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Canonical(benchmark::State& state) {
  const asrt::RootedTree t = asrt::expand(asrt::AsrtTree{3, 2, 4, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(asrt::canonical_form(t));
}
BENCHMARK(BM_Canonical);

}  // namespace
BENCHMARK_MAIN();
