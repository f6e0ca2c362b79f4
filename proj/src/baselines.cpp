#include <algorithm>
#include <cmath>
#include <map>

#include "bigram_wsd/error.hpp"
#include "bigram_wsd/learners.hpp"
#include "labels.hpp"

namespace bigram_wsd {

namespace detail {

LabeledVectors index_labels(const FeatureSet& features, std::span<const FeatureVector> vectors) {
  if (vectors.empty()) throw Error("cannot train on an empty training set");
  LabeledVectors data;
  data.vectors = vectors;
  for (const auto& vector : vectors) {
    if (!vector.label || vector.label->empty()) {
      throw Error("training vector \"" + vector.instance_id + "\" has no sense");
    }
    if (vector.bits.size() != features.size()) {
      throw Error("training vector \"" + vector.instance_id + "\" has " +
                  std::to_string(vector.bits.size()) + " bits, feature set has " +
                  std::to_string(features.size()));
    }
    data.senses.push_back(*vector.label);
  }
  std::sort(data.senses.begin(), data.senses.end());
  data.senses.erase(std::unique(data.senses.begin(), data.senses.end()), data.senses.end());

  std::vector<std::size_t> counts(data.senses.size(), 0);
  data.labels.reserve(vectors.size());
  for (const auto& vector : vectors) {
    const auto it = std::lower_bound(data.senses.begin(), data.senses.end(), *vector.label);
    const auto label = static_cast<std::size_t>(it - data.senses.begin());
    data.labels.push_back(label);
    ++counts[label];
  }
  const auto best = std::max_element(counts.begin(), counts.end());
  data.majority = static_cast<std::size_t>(best - counts.begin());
  data.majority_tied = std::count(counts.begin(), counts.end(), *best) > 1;
  return data;
}

}  // namespace detail

NaiveBayesModel train_naive_bayes(const FeatureSet& features,
                                  std::span<const FeatureVector> vectors) {
  const auto data = detail::index_labels(features, vectors);
  const std::size_t n_senses = data.senses.size();

  std::vector<std::uint64_t> sense_count(n_senses, 0);
  std::vector<std::vector<std::uint64_t>> present(features.size(),
                                                  std::vector<std::uint64_t>(n_senses, 0));
  for (std::size_t row = 0; row < vectors.size(); ++row) {
    const std::size_t s = data.labels[row];
    ++sense_count[s];
    const auto& bits = vectors[row].bits;
    for (std::size_t f = 0; f < bits.size(); ++f) {
      if (bits[f]) ++present[f][s];
    }
  }

  NaiveBayesModel model;
  model.senses = data.senses;
  for (const auto& feature : features.features) model.feature_keys.push_back(feature.key());
  const auto n = static_cast<double>(vectors.size());
  for (std::size_t s = 0; s < n_senses; ++s) {
    model.priors.push_back((static_cast<double>(sense_count[s]) + 1.0) /
                           (n + static_cast<double>(n_senses)));
  }
  model.conditionals.assign(features.size(), std::vector<double>(n_senses));
  for (std::size_t f = 0; f < features.size(); ++f) {
    for (std::size_t s = 0; s < n_senses; ++s) {
      model.conditionals[f][s] = (static_cast<double>(present[f][s]) + 1.0) /
                                 (static_cast<double>(sense_count[s]) + 2.0);
    }
  }
  return model;
}

std::string predict(const NaiveBayesModel& model, const FeatureVector& vector) {
  if (vector.bits.size() != model.conditionals.size()) {
    throw Error("feature vector has " + std::to_string(vector.bits.size()) +
                " bits, naive Bayes model expects " + std::to_string(model.conditionals.size()));
  }
  // Posteriors that are equal as rationals can differ in the last bits once
  // logged and summed; anything this close is a tie.
  constexpr double kTieTolerance = 1e-9;
  std::size_t best = 0;
  double best_score = -INFINITY;
  for (std::size_t s = 0; s < model.senses.size(); ++s) {
    double score = std::log(model.priors[s]);
    for (std::size_t f = 0; f < vector.bits.size(); ++f) {
      const double p = model.conditionals[f][s];
      score += std::log(vector.bits[f] ? p : 1.0 - p);
    }
    if (score > best_score + kTieTolerance) {  // lexicographically smaller sense wins ties
      best = s;
      best_score = score;
    }
  }
  return model.senses[best];
}

MajorityModel train_majority(std::span<const FeatureVector> vectors) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& vector : vectors) {
    if (!vector.label || vector.label->empty()) {
      throw Error("training vector \"" + vector.instance_id + "\" has no sense");
    }
    ++counts[*vector.label];
  }
  if (counts.empty()) throw Error("cannot train a majority classifier on no labels");

  MajorityModel model;
  std::uint64_t best = 0;
  for (const auto& [sense, count] : counts) {  // lexicographic, so first max wins
    if (count > best) {
      model.sense = sense;
      best = count;
      model.tie_broken = false;
    } else if (count == best) {
      model.tie_broken = true;
    }
  }
  return model;
}

MajorityModel train_majority(std::span<const Instance> instances) {
  std::vector<FeatureVector> labels;
  labels.reserve(instances.size());
  for (const auto& instance : instances) labels.push_back({instance.id, {}, instance.sense});
  return train_majority(labels);
}

std::string predict(const MajorityModel& model, const FeatureVector&) { return model.sense; }

std::string predict(const Model& model, const FeatureVector& vector) {
  return std::visit([&](const auto& m) { return predict(m, vector); }, model);
}

}  // namespace bigram_wsd
