#include "bigram_wsd/features.hpp"

#include <algorithm>
#include <unordered_map>

#include "bigram_wsd/error.hpp"
#include "bigram_wsd/kernels.hpp"
#include "feature_index.hpp"

namespace bigram_wsd {

std::string_view selection_tag(SelectionMeasure measure) {
  return measure == SelectionMeasure::Dice ? "dice" : "power_divergence";
}

SelectionMeasure parse_selection(std::string_view tag) {
  if (tag == "power_divergence" || tag == "pow") return SelectionMeasure::PowerDivergence;
  if (tag == "dice") return SelectionMeasure::Dice;
  throw Error("unknown selection measure \"" + std::string(tag) +
              "\" (expected power_divergence or dice)");
}

FeatureSet select_bigram_features(std::span<const Instance> train, SelectionMeasure measure,
                                  std::size_t top_k, std::uint64_t min_freq) {
  const BigramCounts counts = count_bigrams(train);

  std::vector<ScoredBigram> ranked;
  std::string statistic;
  if (measure == SelectionMeasure::PowerDivergence) {
    AgreementReport report = agreement_check(counts, min_freq, top_k);
    ranked = std::move(report.canonical);
    statistic = std::string(measure_tag(report.canonical_measure));
  } else {
    ranked = rank_bigrams(counts, Measure::Dice, min_freq, top_k);
    statistic = "dice";
  }

  FeatureSet set;
  set.kind = FeatureKind::Bigram;
  set.provenance = std::string(selection_tag(measure)) + " statistic=" + statistic +
                   " top_k=" + std::to_string(top_k) + " min_freq=" + std::to_string(min_freq);
  set.features.reserve(ranked.size());
  for (auto& entry : ranked) {
    set.features.push_back(Feature{std::move(entry.bigram.first), std::move(entry.bigram.second),
                                   entry.frequency, entry.score});
  }
  return set;
}

FeatureSet select_unigram_features(std::span<const Instance> train, std::uint64_t min_freq) {
  if (min_freq == 0) throw Error("min_freq must be at least 1");
  std::unordered_map<std::string, std::uint64_t> frequency;
  for (const auto& instance : train) {
    for (const auto& token : instance.tokens) ++frequency[token];
  }

  FeatureSet set;
  set.kind = FeatureKind::Unigram;
  set.provenance = "unigram min_freq=" + std::to_string(min_freq);
  for (const auto& [word, count] : frequency) {
    if (count >= min_freq) {
      set.features.push_back(Feature{word, "", count, static_cast<double>(count)});
    }
  }
  std::sort(set.features.begin(), set.features.end(), [](const Feature& a, const Feature& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.first < b.first;
  });
  return set;
}

namespace detail {

FeatureIndex::FeatureIndex(const FeatureSet& features)
    : kind_(features.kind), size_(features.size()) {
  for (std::size_t i = 0; i < features.size(); ++i) {
    const Feature& feature = features.features[i];
    const bool fresh = kind_ == FeatureKind::Unigram
                           ? words_.emplace(feature.first, i).second
                           : bigrams_.emplace(Bigram{feature.first, feature.second}, i).second;
    if (!fresh) throw InvariantError("duplicate feature \"" + feature.key() + "\"");
  }
}

FeatureVector FeatureIndex::encode(const Instance& instance) const {
  FeatureVector vector{instance.id, std::vector<std::uint8_t>(size_, 0), instance.sense};
  const auto& tokens = instance.tokens;
  if (kind_ == FeatureKind::Unigram) {
    for (const auto& token : tokens) {
      if (const auto it = words_.find(token); it != words_.end()) vector.bits[it->second] = 1;
    }
  } else if (!bigrams_.empty()) {
    Bigram probe;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      probe.first = tokens[i - 1];
      probe.second = tokens[i];
      if (const auto it = bigrams_.find(probe); it != bigrams_.end()) vector.bits[it->second] = 1;
    }
  }
  return vector;
}

}  // namespace detail

FeatureVector vectorize(const Instance& instance, const FeatureSet& features) {
  return detail::FeatureIndex(features).encode(instance);
}

std::vector<FeatureVector> vectorize_all(std::span<const Instance> instances,
                                         const FeatureSet& features) {
  return kernels::vectorize_all(instances, features);
}

}  // namespace bigram_wsd
