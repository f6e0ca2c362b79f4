// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to vary the team.

#include <benchmark/benchmark.h>

#include <map>

#include "bigram_wsd/kernels.hpp"
#include "synthetic.hpp"

namespace {

using namespace bigram_wsd;

const std::vector<Instance>& corpus(std::size_t instances) {
  static std::map<std::size_t, std::vector<Instance>> cache;
  auto it = cache.find(instances);
  if (it == cache.end()) {
    testing::Rng rng(2024);
    it = cache.emplace(instances, testing::random_corpus(rng, instances, 100, 5000)).first;
  }
  return it->second;
}

template <BigramCounts (*Count)(std::span<const Instance>)>
void count(benchmark::State& state) {
  const auto& data = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Count(data));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <std::vector<ScoredBigram> (*Score)(const BigramCounts&, std::span<const Bigram* const>,
                                             Measure)>
void score(benchmark::State& state) {
  const BigramCounts counts = reference::count_bigrams(corpus(20000));
  const auto candidates = candidate_bigrams(counts, 2);
  const auto measure = static_cast<Measure>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Score(counts, candidates, measure));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(candidates.size()));
  state.SetLabel(std::string(measure_tag(measure)));
}

template <std::vector<FeatureVector> (*Vectorize)(std::span<const Instance>, const FeatureSet&)>
void vectorize(benchmark::State& state) {
  const auto& data = corpus(static_cast<std::size_t>(state.range(0)));
  static const FeatureSet features =
      select_bigram_features(corpus(5000), SelectionMeasure::Dice, 100, 5);
  for (auto _ : state) benchmark::DoNotOptimize(Vectorize(data, features));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

constexpr auto kFisher = static_cast<std::int64_t>(Measure::Fisher);
constexpr auto kG2 = static_cast<std::int64_t>(Measure::G2);

BENCHMARK(count<reference::count_bigrams>)->Name("count/serial")->Arg(2000)->Arg(20000);
BENCHMARK(count<kernels::count_bigrams>)->Name("count/parallel")->Arg(2000)->Arg(20000);
BENCHMARK(score<reference::score_candidates>)->Name("score/serial")->Arg(kG2)->Arg(kFisher);
BENCHMARK(score<kernels::score_candidates>)->Name("score/parallel")->Arg(kG2)->Arg(kFisher);
BENCHMARK(vectorize<reference::vectorize_all>)->Name("vectorize/serial")->Arg(2000)->Arg(20000);
BENCHMARK(vectorize<kernels::vectorize_all>)->Name("vectorize/parallel")->Arg(2000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
