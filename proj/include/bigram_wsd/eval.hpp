#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigram_wsd/learners.hpp"

namespace bigram_wsd {

/// Exact-match accuracy kept as a ratio so it can be compared exactly.
struct Accuracy {
  std::uint64_t correct = 0;
  std::uint64_t total = 0;

  double value() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  }
  bool operator==(const Accuracy&) const = default;
};

/// Fine-grained scoring: a prediction counts only if it equals the gold sense
/// exactly. Every gold id must be predicted, and no other id may be.
Accuracy score(const std::map<std::string, std::string>& predictions,
               const std::map<std::string, std::string>& gold);

/// Converts a precision/recall pair to accuracy by taking their product.
double pr_to_accuracy(double precision, double recall);

struct Comparison {
  std::string method_a;
  std::string method_b;
  std::size_t wins = 0;
  std::size_t ties = 0;
  std::size_t losses = 0;

  /// "wins-ties-losses"
  std::string str() const;
  bool operator==(const Comparison&) const = default;
};

/// Per task, a wins when it is more accurate than b by more than epsilon.
/// Throws Error when the task sets differ.
Comparison win_tie_loss(const std::map<std::string, double>& a,
                        const std::map<std::string, double>& b, double epsilon = 0.0,
                        std::string method_a = "a", std::string method_b = "b");

// Method tags, in report column order.
inline constexpr std::string_view kMajority = "maj";
inline constexpr std::string_view kTreePow = "tree-pow";
inline constexpr std::string_view kStumpPow = "stump-pow";
inline constexpr std::string_view kTreeDice = "tree-dice";
inline constexpr std::string_view kStumpDice = "stump-dice";
inline constexpr std::string_view kNaiveBayes = "naive-bayes";

/// Accuracy of one method on one task.
struct TaskResult {
  std::string word_pos;
  std::string method;
  Accuracy accuracy;
  std::optional<TreeStats> tree_stats;  // tree methods only

  bool operator==(const TaskResult&) const = default;
};

/// Everything the reports need about one task.
struct TaskSummary {
  std::string word;
  char pos = 'p';
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::size_t test_senses = 0;  // distinct gold senses in the test data
  std::vector<TaskResult> results;
  std::optional<std::string> failure;

  std::string word_pos() const { return word + "-" + pos; }
  const TaskResult* find(std::string_view method) const;
  bool operator==(const TaskSummary&) const = default;
};

/// Published precision/recall for one task, as fractions in [0, 1].
struct ReferenceScores {
  double best_precision = 0;
  double best_recall = 0;
  double avg_precision = 0;
  double avg_recall = 0;

  double best() const { return pr_to_accuracy(best_precision, best_recall); }
  double avg() const { return pr_to_accuracy(avg_precision, avg_recall); }
};

using ReferenceTable = std::map<std::string, ReferenceScores>;  // keyed by word-pos

/// TSV: word-pos, best_precision, best_recall, avg_precision, avg_recall.
/// An optional header line beginning with "word-pos" is skipped.
ReferenceTable load_reference(std::istream& in);
ReferenceTable load_reference(const std::filesystem::path& path);

/// Tasks in report order: noun, verb, adjective, unspecified; then by word.
std::vector<TaskSummary> report_order(std::vector<TaskSummary> tasks);

/// Comparisons of tree-pow against every other column, over tasks where both ran.
std::vector<Comparison> footer_comparisons(const std::vector<TaskSummary>& tasks,
                                           const ReferenceTable* reference);

std::string format_results(const std::vector<TaskSummary>& tasks, const ReferenceTable* reference);
std::string format_trees(const std::vector<TaskSummary>& tasks);
std::string format_accuracies(const std::vector<TaskSummary>& tasks);

/// Writes results.tsv, trees.tsv and accuracies.tsv into out_dir.
/// Throws Error naming the path on write failure.
void emit_report(const std::vector<TaskSummary>& tasks, const ReferenceTable* reference,
                 const std::filesystem::path& out_dir);

}  // namespace bigram_wsd
