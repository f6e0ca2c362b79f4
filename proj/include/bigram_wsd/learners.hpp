#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bigram_wsd/features.hpp"

namespace bigram_wsd {

// ---------------------------------------------------------------------------
// Split criteria

/// Shannon entropy in bits. Throws Error if every count is zero.
double entropy(std::span<const std::uint64_t> counts);
double entropy(const std::map<std::string, std::uint64_t>& label_counts);

/// Information gain of a binary split divided by its split information
/// (entropy of the branch sizes). Returns 0 for a degenerate split.
/// Throws Error unless present + absent == parent elementwise.
double gain_ratio(std::span<const std::uint64_t> parent, std::span<const std::uint64_t> present,
                  std::span<const std::uint64_t> absent);

/// Plain information gain (bits) of the same split.
double information_gain(std::span<const std::uint64_t> parent,
                        std::span<const std::uint64_t> present,
                        std::span<const std::uint64_t> absent);

/// C4.5's pessimistic estimate of the extra errors at a leaf covering `n`
/// instances with `errors` misclassified, at confidence level `confidence`.
double pessimistic_extra_errors(double n, double errors, double confidence);

// ---------------------------------------------------------------------------
// Decision trees

struct TreeConfig {
  std::size_t min_leaf = 2;
  double prune_confidence = 0.25;
  bool prune = true;
};

/// Node of a binary presence/absence tree. Internal nodes also keep the
/// majority sense and counts of the instances that reached them.
struct TreeNode {
  std::optional<std::size_t> feature;  // bit tested; nullopt at leaves
  std::size_t absent = 0;              // child index when the bit is 0
  std::size_t present = 0;             // child index when the bit is 1
  std::string sense;
  std::uint64_t training_count = 0;
  std::uint64_t error_count = 0;

  bool is_leaf() const noexcept { return !feature.has_value(); }
  bool operator==(const TreeNode&) const = default;
};

struct TreeModel {
  std::vector<std::string> feature_keys;  // aligned with the training FeatureSet
  std::vector<TreeNode> nodes;            // nodes[0] is the root; children follow parents
  std::optional<std::string> stump_feature;
  std::size_t leaf_count = 0;
  std::size_t total_count = 0;
  std::size_t feature_set_size = 0;

  std::size_t internal_count() const noexcept { return total_count - leaf_count; }
  const TreeNode& root() const { return nodes.front(); }

  bool operator==(const TreeModel&) const = default;
};

/// Greedy top-down induction choosing the unused feature with the highest
/// gain ratio (ties: lowest feature index), followed by optional pessimistic
/// error-based pruning. A split is admissible only if both branches receive
/// at least min_leaf instances and it has positive information gain.
TreeModel train_tree(const FeatureSet& features, std::span<const FeatureVector> vectors,
                     const TreeConfig& config = {});

/// The tree learner stopped after its first split: both branches are
/// majority leaves. 1/1 when no admissible split exists.
TreeModel train_stump(const FeatureSet& features, std::span<const FeatureVector> vectors,
                      const TreeConfig& config = {});

/// Throws InvariantError on broken child links, repeated features on a path,
/// or counts that disagree with the node array.
void validate(const TreeModel& model);

struct TreeStats {
  std::optional<std::string> stump_node_label;
  std::size_t leaf_count = 0;
  std::size_t total_count = 0;
  std::size_t feature_set_size = 0;

  /// "leaf/total", e.g. "8/15".
  std::string leaf_total() const;
  bool operator==(const TreeStats&) const = default;
};

TreeStats tree_stats(const TreeModel& model);

// ---------------------------------------------------------------------------
// Baselines

/// Naive Bayes over binary features with add-one smoothing.
struct NaiveBayesModel {
  std::vector<std::string> feature_keys;
  std::vector<std::string> senses;               // lexicographic
  std::vector<double> priors;                    // per sense
  std::vector<std::vector<double>> conditionals; // [feature][sense] = P(bit=1 | sense)

  bool operator==(const NaiveBayesModel&) const = default;
};

NaiveBayesModel train_naive_bayes(const FeatureSet& features,
                                  std::span<const FeatureVector> vectors);

struct MajorityModel {
  std::string sense;
  bool tie_broken = false;

  bool operator==(const MajorityModel&) const = default;
};

MajorityModel train_majority(std::span<const FeatureVector> vectors);
MajorityModel train_majority(std::span<const Instance> instances);

using Model = std::variant<TreeModel, NaiveBayesModel, MajorityModel>;

/// Throws Error when the vector length does not match the model's features.
std::string predict(const TreeModel& model, const FeatureVector& vector);
std::string predict(const NaiveBayesModel& model, const FeatureVector& vector);
std::string predict(const MajorityModel& model, const FeatureVector& vector);
std::string predict(const Model& model, const FeatureVector& vector);

}  // namespace bigram_wsd
