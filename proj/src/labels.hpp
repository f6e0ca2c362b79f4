#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bigram_wsd/features.hpp"

namespace bigram_wsd::detail {

/// Training vectors with their senses mapped to dense lexicographic indices.
struct LabeledVectors {
  std::span<const FeatureVector> vectors;
  std::vector<std::string> senses;   // sorted, distinct
  std::vector<std::size_t> labels;   // sense index per vector
  std::size_t majority = 0;          // most frequent sense, lowest index on ties
  bool majority_tied = false;
};

/// Throws Error on an empty set, an unlabeled vector, or a vector whose
/// length differs from the feature set.
LabeledVectors index_labels(const FeatureSet& features, std::span<const FeatureVector> vectors);

}  // namespace bigram_wsd::detail
