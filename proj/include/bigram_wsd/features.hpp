#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigram_wsd/corpus.hpp"
#include "bigram_wsd/stats.hpp"

namespace bigram_wsd {

enum class FeatureKind { Bigram, Unigram };

/// Feature-selection statistic for bigram features. PowerDivergence is the
/// canonical order from agreement_check (G2, or Fisher on disagreement).
enum class SelectionMeasure { PowerDivergence, Dice };

std::string_view selection_tag(SelectionMeasure measure);
/// Accepts power_divergence (alias pow) and dice.
SelectionMeasure parse_selection(std::string_view tag);

struct Feature {
  std::string first;
  std::string second;  // empty for unigram features
  std::uint64_t frequency = 0;
  double score = 0;

  /// "w1 w2" for bigrams, the word for unigrams.
  std::string key() const { return second.empty() ? first : first + ' ' + second; }

  bool operator==(const Feature&) const = default;
};

/// Ordered feature keys; position i is bit i of every FeatureVector.
struct FeatureSet {
  FeatureKind kind = FeatureKind::Bigram;
  std::vector<Feature> features;  // selection rank order, no duplicates
  std::string provenance;         // measure and parameters used

  std::size_t size() const noexcept { return features.size(); }
  bool empty() const noexcept { return features.empty(); }

  bool operator==(const FeatureSet&) const = default;
};

struct FeatureVector {
  std::string instance_id;
  std::vector<std::uint8_t> bits;  // 0/1, aligned with FeatureSet order
  std::optional<std::string> label;

  bool operator==(const FeatureVector&) const = default;
};

inline constexpr std::size_t kDefaultTopK = 100;
inline constexpr std::uint64_t kDefaultMinFreq = 5;

/// Top-k bigrams of the training data under `measure`, frequency >= min_freq,
/// tie-inclusive (the result may hold more than top_k features).
FeatureSet select_bigram_features(std::span<const Instance> train, SelectionMeasure measure,
                                  std::size_t top_k = kDefaultTopK,
                                  std::uint64_t min_freq = kDefaultMinFreq);

/// Bag of words: every token with frequency >= min_freq, by (frequency desc, word asc).
FeatureSet select_unigram_features(std::span<const Instance> train,
                                   std::uint64_t min_freq = kDefaultMinFreq);

/// Bit i is 1 iff feature i occurs anywhere in the instance.
FeatureVector vectorize(const Instance& instance, const FeatureSet& features);

/// vectorize over a whole dataset, in input order.
std::vector<FeatureVector> vectorize_all(std::span<const Instance> instances,
                                         const FeatureSet& features);

}  // namespace bigram_wsd
