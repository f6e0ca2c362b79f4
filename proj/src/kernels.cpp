#include "bigram_wsd/kernels.hpp"

#include <cstddef>
#include <exception>
#include <optional>

#include <omp.h>

#include "feature_index.hpp"

namespace bigram_wsd::kernels {

namespace {

void count_instance(const Instance& instance, BigramCounts& counts) {
  for (std::size_t i = 1; i < instance.tokens.size(); ++i) {
    counts.add(instance.tokens[i - 1], instance.tokens[i]);
  }
}

}  // namespace

BigramCounts count_bigrams(std::span<const Instance> instances) {
  BigramCounts merged;
  const auto n = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel
  {
    BigramCounts local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) count_instance(instances[i], local);
#pragma omp critical(bigram_wsd_merge_counts)
    merged.merge(local);
  }
  return merged;
}

std::vector<ScoredBigram> score_candidates(const BigramCounts& counts,
                                           std::span<const Bigram* const> candidates,
                                           Measure measure) {
  std::optional<LogFactorials> log_factorials;
  if (measure == Measure::Fisher) log_factorials.emplace(counts.total);
  const LogFactorials* lf = log_factorials ? &*log_factorials : nullptr;

  std::vector<std::optional<ScoredBigram>> slots(candidates.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      slots[i] = score_bigram(*candidates[i], counts, measure, lf);
    } catch (...) {
#pragma omp critical(bigram_wsd_score_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ScoredBigram> scored;
  scored.reserve(slots.size());
  for (auto& slot : slots) {
    if (slot) scored.push_back(std::move(*slot));
  }
  return scored;
}

std::vector<FeatureVector> vectorize_all(std::span<const Instance> instances,
                                         const FeatureSet& features) {
  const detail::FeatureIndex index(features);
  std::vector<FeatureVector> vectors(instances.size());
  const auto n = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) vectors[i] = index.encode(instances[i]);
  return vectors;
}

}  // namespace bigram_wsd::kernels
