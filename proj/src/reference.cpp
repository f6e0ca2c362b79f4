// Serial, deliberately plain versions of the parallel kernels.

#include <cstddef>
#include <optional>

#include "bigram_wsd/kernels.hpp"

namespace bigram_wsd::reference {

BigramCounts count_bigrams(std::span<const Instance> instances) {
  BigramCounts counts;
  for (const auto& instance : instances) {
    for (std::size_t i = 0; i + 1 < instance.tokens.size(); ++i) {
      counts.add(instance.tokens[i], instance.tokens[i + 1]);
    }
  }
  return counts;
}

std::vector<ScoredBigram> score_candidates(const BigramCounts& counts,
                                           std::span<const Bigram* const> candidates,
                                           Measure measure) {
  std::optional<LogFactorials> log_factorials;
  if (measure == Measure::Fisher) log_factorials.emplace(counts.total);
  std::vector<ScoredBigram> scored;
  for (const Bigram* bigram : candidates) {
    auto entry = score_bigram(*bigram, counts, measure, log_factorials ? &*log_factorials : nullptr);
    if (entry) scored.push_back(std::move(*entry));
  }
  return scored;
}

// Linear scan per feature, no hashing.
std::vector<FeatureVector> vectorize_all(std::span<const Instance> instances,
                                         const FeatureSet& features) {
  std::vector<FeatureVector> vectors;
  vectors.reserve(instances.size());
  for (const auto& instance : instances) {
    FeatureVector vector{instance.id, std::vector<std::uint8_t>(features.size(), 0), instance.sense};
    const auto& tokens = instance.tokens;
    for (std::size_t f = 0; f < features.size(); ++f) {
      const Feature& feature = features.features[f];
      if (features.kind == FeatureKind::Unigram) {
        for (const auto& token : tokens) {
          if (token == feature.first) {
            vector.bits[f] = 1;
            break;
          }
        }
      } else {
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
          if (tokens[i] == feature.first && tokens[i + 1] == feature.second) {
            vector.bits[f] = 1;
            break;
          }
        }
      }
    }
    vectors.push_back(std::move(vector));
  }
  return vectors;
}

}  // namespace bigram_wsd::reference
