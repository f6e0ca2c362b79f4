#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bigram_wsd/features.hpp"
#include "bigram_wsd/stats.hpp"

namespace bigram_wsd {

/// rank, w1, w2, n11, n1+, n+1, score, measure; scores to 6 significant digits.
std::string format_ranked(const std::vector<ScoredBigram>& ranked);

/// rank, key, frequency, score.
std::string format_feature_set(const FeatureSet& features);

/// id, sense
void write_predictions(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows);
/// Throws ParseError on rows without exactly two fields or on repeated ids.
std::map<std::string, std::string> read_predictions(std::istream& in);

}  // namespace bigram_wsd
