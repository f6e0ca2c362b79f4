#include "bigram_wsd/tsv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "bigram_wsd/error.hpp"

namespace bigram_wsd {

namespace {

std::string significant6(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

}  // namespace

std::string format_ranked(const std::vector<ScoredBigram>& ranked) {
  std::ostringstream out;
  out << "rank\tw1\tw2\tn11\tn1+\tn+1\tscore\tmeasure\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& entry = ranked[i];
    out << i + 1 << '\t' << entry.bigram.first << '\t' << entry.bigram.second << '\t'
        << entry.frequency << '\t' << entry.first_count << '\t' << entry.second_count << '\t'
        << significant6(entry.score) << '\t' << measure_tag(entry.measure) << '\n';
  }
  return out.str();
}

std::string format_feature_set(const FeatureSet& features) {
  std::ostringstream out;
  out << "rank\tkey\tfrequency\tscore\n";
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& feature = features.features[i];
    out << i + 1 << '\t' << feature.key() << '\t' << feature.frequency << '\t'
        << significant6(feature.score) << '\n';
  }
  return out.str();
}

void write_predictions(std::ostream& out,
                       const std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [id, sense] : rows) out << id << '\t' << sense << '\n';
}

std::map<std::string, std::string> read_predictions(std::istream& in) {
  std::map<std::string, std::string> predictions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(line_no, "expected id<TAB>sense");
    }
    if (!predictions.emplace(line.substr(0, tab), line.substr(tab + 1)).second) {
      throw ParseError(line_no, "duplicate prediction id \"" + line.substr(0, tab) + "\"");
    }
  }
  return predictions;
}

}  // namespace bigram_wsd
