#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "brsc/catalog.hpp"
#include "brsc/classify.hpp"
#include "brsc/flats.hpp"
#include "brsc/matroid.hpp"
#include "brsc/tbrsc.hpp"
#include "brsc/topology.hpp"

namespace {

using namespace brsc;

void BM_epsilon_swirl(benchmark::State& state) {
  const SimplicialComplex s = swirl(2);
  for (auto _ : state) benchmark::DoNotOptimize(epsilon(s).members().size());
}
BENCHMARK(BM_epsilon_swirl);

void BM_flats_swirl(benchmark::State& state) {
  const SimplicialComplex s = swirl(2);
  for (auto _ : state) benchmark::DoNotOptimize(flats(s).members().size());
}
BENCHMARK(BM_flats_swirl);

void BM_tbrsc_check_swirl(benchmark::State& state) {
  const SimplicialComplex s = swirl(2);
  for (auto _ : state) benchmark::DoNotOptimize(is_tbrsc(s).holds);
}
BENCHMARK(BM_tbrsc_check_swirl);

void BM_br_check_truno(benchmark::State& state) {
  const SimplicialComplex s = example("truno").complex;
  for (auto _ : state)
    benchmark::DoNotOptimize(is_boolean_representable(s).holds);
}
BENCHMARK(BM_br_check_truno);

void BM_permanent(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(77);
  std::vector<std::vector<Mask>> inputs;
  for (int i = 0; i < 64; ++i) {
    std::vector<Mask> rows;
    for (int r = 0; r < k; ++r)
      rows.push_back(Mask{rng() & ((1ull << k) - 1)});
    inputs.push_back(std::move(rows));
  }
  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sb_permanent(inputs[next]));
    next = (next + 1) % inputs.size();
  }
}
BENCHMARK(BM_permanent)->Arg(6)->Arg(10)->Arg(14);

void BM_classify_shard(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        classify_pavings(5, 2, "tbrsc & !br", 1).scanned);
}
BENCHMARK(BM_classify_shard);

void BM_classify_six(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        classify_pavings(6, 2, "tbrsc & !br", threads).matched);
}
BENCHMARK(BM_classify_six)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_homology_truno(benchmark::State& state) {
  const SimplicialComplex s = example("truno").complex;
  for (auto _ : state) benchmark::DoNotOptimize(homology(s).betti.back());
}
BENCHMARK(BM_homology_truno);

}  // namespace

BENCHMARK_MAIN();
