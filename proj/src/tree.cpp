#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

#include "bigram_wsd/error.hpp"
#include "bigram_wsd/learners.hpp"
#include "labels.hpp"

namespace bigram_wsd {

// ---------------------------------------------------------------------------
// Split criteria

double entropy(std::span<const std::uint64_t> counts) {
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total == 0) throw Error("entropy of an empty distribution");
  const auto n = static_cast<double>(total);
  double h = 0.0;
  for (const std::uint64_t count : counts) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  return h;
}

double entropy(const std::map<std::string, std::uint64_t>& label_counts) {
  std::vector<std::uint64_t> counts;
  counts.reserve(label_counts.size());
  for (const auto& entry : label_counts) counts.push_back(entry.second);
  return entropy(counts);
}

namespace {

std::uint64_t sum(std::span<const std::uint64_t> counts) {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

double branch_entropy(std::span<const std::uint64_t> counts) {
  return sum(counts) == 0 ? 0.0 : entropy(counts);
}

void check_split(std::span<const std::uint64_t> parent, std::span<const std::uint64_t> present,
                 std::span<const std::uint64_t> absent) {
  if (present.size() != parent.size() || absent.size() != parent.size()) {
    throw Error("split count vectors differ in length");
  }
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (present[i] + absent[i] != parent[i]) {
      throw Error("split counts do not add up to the parent counts");
    }
  }
}

}  // namespace

double information_gain(std::span<const std::uint64_t> parent,
                        std::span<const std::uint64_t> present,
                        std::span<const std::uint64_t> absent) {
  check_split(parent, present, absent);
  const auto n = static_cast<double>(sum(parent));
  const auto n_present = static_cast<double>(sum(present));
  const auto n_absent = static_cast<double>(sum(absent));
  return entropy(parent) - (n_present / n) * branch_entropy(present) -
         (n_absent / n) * branch_entropy(absent);
}

double gain_ratio(std::span<const std::uint64_t> parent, std::span<const std::uint64_t> present,
                  std::span<const std::uint64_t> absent) {
  const double gain = information_gain(parent, present, absent);
  const std::uint64_t sizes[] = {sum(present), sum(absent)};
  const double split_info = entropy(sizes);
  if (split_info == 0.0) return 0.0;
  return gain / split_info;
}

double pessimistic_extra_errors(double n, double errors, double confidence) {
  if (!(confidence > 0.0 && confidence <= 0.5)) {
    throw Error("pruning confidence must lie in (0, 0.5]");
  }
  if (n <= 0.0) return 0.0;
  if (errors < 1.0) {
    const double base = n * (1.0 - std::pow(confidence, 1.0 / n));
    if (errors == 0.0) return base;
    return base + errors * (pessimistic_extra_errors(n, 1.0, confidence) - base);
  }
  if (errors + 0.5 >= n) return std::max(n - errors, 0.0);

  const double z = boost::math::quantile(boost::math::normal(), 1.0 - confidence);
  const double f = (errors + 0.5) / n;
  const double upper =
      (f + z * z / (2 * n) + z * std::sqrt(f / n - f * f / n + z * z / (4 * n * n))) /
      (1 + z * z / n);
  return upper * n - errors;
}

// ---------------------------------------------------------------------------
// Induction

namespace {

constexpr double kMinGain = 1e-12;

class TreeBuilder {
 public:
  TreeBuilder(const detail::LabeledVectors& data, const TreeConfig& config)
      : data_(data), config_(config) {}

  std::size_t grow(const std::vector<std::size_t>& rows, std::vector<bool>& used, bool stump) {
    const std::size_t index = make_node(rows);
    if (rows.empty() || nodes_[index].error_count == 0) return index;

    const auto feature = best_split(rows, used);
    if (!feature) return index;

    std::vector<std::size_t> absent_rows, present_rows;
    for (const std::size_t row : rows) {
      (data_.vectors[row].bits[*feature] ? present_rows : absent_rows).push_back(row);
    }

    nodes_[index].feature = *feature;
    used[*feature] = true;
    std::size_t absent, present;
    if (stump) {
      absent = make_node(absent_rows);
      present = make_node(present_rows);
    } else {
      absent = grow(absent_rows, used, false);
      present = grow(present_rows, used, false);
    }
    used[*feature] = false;
    nodes_[index].absent = absent;
    nodes_[index].present = present;
    return index;
  }

  std::vector<TreeNode> take_nodes() { return std::move(nodes_); }

 private:
  std::vector<std::uint64_t> sense_counts(const std::vector<std::size_t>& rows) const {
    std::vector<std::uint64_t> counts(data_.senses.size(), 0);
    for (const std::size_t row : rows) ++counts[data_.labels[row]];
    return counts;
  }

  // Majority leaf for `rows`; empty branches fall back to the global majority.
  std::size_t make_node(const std::vector<std::size_t>& rows) {
    TreeNode node;
    if (rows.empty()) {
      node.sense = data_.senses[data_.majority];
    } else {
      const auto counts = sense_counts(rows);
      const auto best = std::max_element(counts.begin(), counts.end());  // first max wins
      node.sense = data_.senses[static_cast<std::size_t>(best - counts.begin())];
      node.training_count = rows.size();
      node.error_count = rows.size() - *best;
    }
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  std::optional<std::size_t> best_split(const std::vector<std::size_t>& rows,
                                        const std::vector<bool>& used) const {
    const auto parent = sense_counts(rows);
    const std::size_t feature_count = used.size();
    std::vector<std::uint64_t> present(parent.size()), absent(parent.size());

    std::optional<std::size_t> best;
    double best_ratio = 0.0;
    for (std::size_t f = 0; f < feature_count; ++f) {
      if (used[f]) continue;
      std::fill(present.begin(), present.end(), 0);
      std::size_t present_total = 0;
      for (const std::size_t row : rows) {
        if (data_.vectors[row].bits[f]) {
          ++present[data_.labels[row]];
          ++present_total;
        }
      }
      const std::size_t absent_total = rows.size() - present_total;
      if (present_total < config_.min_leaf || absent_total < config_.min_leaf) continue;
      if (present_total == 0 || absent_total == 0) continue;
      for (std::size_t s = 0; s < parent.size(); ++s) absent[s] = parent[s] - present[s];

      if (information_gain(parent, present, absent) <= kMinGain) continue;
      const double ratio = gain_ratio(parent, present, absent);
      if (!best || ratio > best_ratio) {
        best = f;
        best_ratio = ratio;
      }
    }
    return best;
  }

  const detail::LabeledVectors& data_;
  const TreeConfig& config_;
  std::vector<TreeNode> nodes_;
};

// Bottom-up subtree replacement; returns the estimated errors of the (possibly
// collapsed) subtree rooted at `index`.
double prune(std::vector<TreeNode>& nodes, std::size_t index, double confidence) {
  TreeNode& node = nodes[index];
  const auto n = static_cast<double>(node.training_count);
  const auto e = static_cast<double>(node.error_count);
  const double as_leaf = e + pessimistic_extra_errors(n, e, confidence);
  if (node.is_leaf()) return as_leaf;

  const double as_subtree = prune(nodes, node.absent, confidence) +
                            prune(nodes, node.present, confidence);
  if (as_subtree >= as_leaf) {
    nodes[index].feature.reset();
    return as_leaf;
  }
  return as_subtree;
}

// Copies the reachable nodes in pre-order (absent branch first).
void compact(const std::vector<TreeNode>& from, std::size_t index, std::vector<TreeNode>& to) {
  const std::size_t at = to.size();
  to.push_back(from[index]);
  if (from[index].is_leaf()) {
    to[at].absent = to[at].present = 0;
    return;
  }
  to[at].absent = to.size();
  compact(from, from[index].absent, to);
  to[at].present = to.size();
  compact(from, from[index].present, to);
}

TreeModel finish(const FeatureSet& features, std::vector<TreeNode> raw) {
  TreeModel model;
  model.feature_set_size = features.size();
  model.feature_keys.reserve(features.size());
  for (const auto& feature : features.features) model.feature_keys.push_back(feature.key());
  compact(raw, 0, model.nodes);
  for (const auto& node : model.nodes) {
    if (node.is_leaf()) ++model.leaf_count;
  }
  model.total_count = model.nodes.size();
  if (!model.root().is_leaf()) model.stump_feature = model.feature_keys[*model.root().feature];
  return model;
}

TreeModel induce(const FeatureSet& features, std::span<const FeatureVector> vectors,
                 const TreeConfig& config, bool stump) {
  const auto data = detail::index_labels(features, vectors);
  std::vector<std::size_t> rows(vectors.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::vector<bool> used(features.size(), false);

  TreeBuilder builder(data, config);
  builder.grow(rows, used, stump);
  auto nodes = builder.take_nodes();
  if (!stump && config.prune) prune(nodes, 0, config.prune_confidence);
  return finish(features, std::move(nodes));
}

}  // namespace

TreeModel train_tree(const FeatureSet& features, std::span<const FeatureVector> vectors,
                     const TreeConfig& config) {
  return induce(features, vectors, config, false);
}

TreeModel train_stump(const FeatureSet& features, std::span<const FeatureVector> vectors,
                      const TreeConfig& config) {
  return induce(features, vectors, config, true);
}

// ---------------------------------------------------------------------------
// Inspection

void validate(const TreeModel& model) {
  if (model.nodes.empty()) throw InvariantError("tree has no nodes");
  if (model.feature_keys.size() != model.feature_set_size) {
    throw InvariantError("feature key count differs from feature_set_size");
  }
  std::vector<bool> seen(model.nodes.size(), false);
  std::vector<bool> on_path(model.feature_set_size, false);
  std::size_t leaves = 0;

  const auto walk = [&](auto&& self, std::size_t index) -> void {
    if (index >= model.nodes.size()) throw InvariantError("child index out of range");
    if (seen[index]) throw InvariantError("node reached twice");
    seen[index] = true;
    const TreeNode& node = model.nodes[index];
    if (node.sense.empty()) throw InvariantError("node without a sense");
    if (node.is_leaf()) {
      ++leaves;
      return;
    }
    const std::size_t f = *node.feature;
    if (f >= model.feature_set_size) throw InvariantError("feature index out of range");
    if (on_path[f]) {
      throw InvariantError("feature \"" + model.feature_keys[f] + "\" repeats on a path");
    }
    on_path[f] = true;
    self(self, node.absent);
    self(self, node.present);
    on_path[f] = false;
  };
  walk(walk, 0);

  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvariantError("unreachable nodes in tree");
  }
  if (leaves != model.leaf_count || model.nodes.size() != model.total_count) {
    throw InvariantError("leaf/total counts disagree with the node array");
  }
  if (model.total_count != 2 * model.leaf_count - 1) {
    throw InvariantError("binary tree identity total = 2*leaf - 1 violated");
  }
  const auto& root = model.root();
  const std::optional<std::string> expected_stump =
      root.is_leaf() ? std::nullopt : std::optional(model.feature_keys[*root.feature]);
  if (expected_stump != model.stump_feature) throw InvariantError("stump feature is not the root");
}

std::string TreeStats::leaf_total() const {
  return std::to_string(leaf_count) + "/" + std::to_string(total_count);
}

TreeStats tree_stats(const TreeModel& model) {
  return {model.stump_feature, model.leaf_count, model.total_count, model.feature_set_size};
}

std::string predict(const TreeModel& model, const FeatureVector& vector) {
  if (vector.bits.size() != model.feature_set_size) {
    throw Error("feature vector has " + std::to_string(vector.bits.size()) +
                " bits, tree expects " + std::to_string(model.feature_set_size));
  }
  std::size_t index = 0;
  while (!model.nodes[index].is_leaf()) {
    const TreeNode& node = model.nodes[index];
    index = vector.bits[*node.feature] ? node.present : node.absent;
  }
  return model.nodes[index].sense;
}

}  // namespace bigram_wsd
