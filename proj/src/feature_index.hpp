#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>

#include "bigram_wsd/corpus.hpp"
#include "bigram_wsd/features.hpp"
#include "bigram_wsd/stats.hpp"

namespace bigram_wsd::detail {

/// Hash lookup from feature key to bit position.
class FeatureIndex {
 public:
  explicit FeatureIndex(const FeatureSet& features);

  /// Sets the bits of every feature present in `instance`.
  FeatureVector encode(const Instance& instance) const;

 private:
  FeatureKind kind_;
  std::size_t size_;
  std::unordered_map<Bigram, std::size_t, BigramHash> bigrams_;
  std::unordered_map<std::string, std::size_t> words_;
};

}  // namespace bigram_wsd::detail
