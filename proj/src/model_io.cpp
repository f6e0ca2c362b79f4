#include "bigram_wsd/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bigram_wsd/error.hpp"

namespace bigram_wsd {

using nlohmann::json;

namespace {

json feature_set_json(const FeatureSet& set) {
  json features = json::array();
  for (const auto& feature : set.features) {
    json entry{{"first", feature.first}, {"frequency", feature.frequency}, {"score", feature.score}};
    if (set.kind == FeatureKind::Bigram) entry["second"] = feature.second;
    features.push_back(std::move(entry));
  }
  return {{"kind", set.kind == FeatureKind::Bigram ? "bigram" : "unigram"},
          {"provenance", set.provenance},
          {"features", std::move(features)}};
}

FeatureSet feature_set_from(const json& j) {
  FeatureSet set;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "bigram") {
    set.kind = FeatureKind::Bigram;
  } else if (kind == "unigram") {
    set.kind = FeatureKind::Unigram;
  } else {
    throw Error("unknown feature kind \"" + kind + "\"");
  }
  set.provenance = j.at("provenance").get<std::string>();
  for (const auto& entry : j.at("features")) {
    Feature feature;
    feature.first = entry.at("first").get<std::string>();
    if (set.kind == FeatureKind::Bigram) feature.second = entry.at("second").get<std::string>();
    feature.frequency = entry.at("frequency").get<std::uint64_t>();
    feature.score = entry.at("score").get<double>();
    set.features.push_back(std::move(feature));
  }
  return set;
}

json node_json(const TreeModel& model, std::size_t index) {
  const TreeNode& node = model.nodes[index];
  json j{{"sense", node.sense}, {"count", node.training_count}, {"errors", node.error_count}};
  if (node.is_leaf()) {
    j["kind"] = "leaf";
  } else {
    j["kind"] = "internal";
    j["feature"] = model.feature_keys[*node.feature];
    j["feature_index"] = *node.feature;
    j["absent"] = node_json(model, node.absent);
    j["present"] = node_json(model, node.present);
  }
  return j;
}

void read_node(const json& j, TreeModel& model) {
  const std::size_t at = model.nodes.size();
  model.nodes.emplace_back();
  TreeNode node;
  node.sense = j.at("sense").get<std::string>();
  node.training_count = j.at("count").get<std::uint64_t>();
  node.error_count = j.at("errors").get<std::uint64_t>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "internal") {
    node.feature = j.at("feature_index").get<std::size_t>();
    node.absent = model.nodes.size();
    model.nodes[at] = node;
    read_node(j.at("absent"), model);
    model.nodes[at].present = model.nodes.size();
    read_node(j.at("present"), model);
  } else if (kind == "leaf") {
    ++model.leaf_count;
    model.nodes[at] = node;
  } else {
    throw Error("unknown tree node kind \"" + kind + "\"");
  }
}

json model_json(const Model& model) {
  if (const auto* tree = std::get_if<TreeModel>(&model)) {
    return {{"kind", "tree"},
            {"feature_set_size", tree->feature_set_size},
            {"leaf_count", tree->leaf_count},
            {"total_count", tree->total_count},
            {"root", node_json(*tree, 0)}};
  }
  if (const auto* nb = std::get_if<NaiveBayesModel>(&model)) {
    return {{"kind", "naive_bayes"},
            {"senses", nb->senses},
            {"priors", nb->priors},
            {"conditionals", nb->conditionals}};
  }
  const auto& majority = std::get<MajorityModel>(model);
  return {{"kind", "majority"}, {"sense", majority.sense}, {"tie_broken", majority.tie_broken}};
}

std::vector<std::string> keys_of(const FeatureSet& set) {
  std::vector<std::string> keys;
  for (const auto& feature : set.features) keys.push_back(feature.key());
  return keys;
}

Model model_from(const json& j, const FeatureSet& features) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "tree") {
    TreeModel tree;
    tree.feature_keys = keys_of(features);
    tree.feature_set_size = j.at("feature_set_size").get<std::size_t>();
    read_node(j.at("root"), tree);
    tree.total_count = tree.nodes.size();
    if (!tree.root().is_leaf()) {
      const std::size_t f = *tree.root().feature;
      if (f >= tree.feature_keys.size()) throw Error("root feature index out of range");
      tree.stump_feature = tree.feature_keys[f];
    }
    if (j.at("leaf_count").get<std::size_t>() != tree.leaf_count ||
        j.at("total_count").get<std::size_t>() != tree.total_count) {
      throw Error("tree leaf/total counts disagree with its nodes");
    }
    validate(tree);
    return tree;
  }
  if (kind == "naive_bayes") {
    NaiveBayesModel nb;
    nb.feature_keys = keys_of(features);
    nb.senses = j.at("senses").get<std::vector<std::string>>();
    nb.priors = j.at("priors").get<std::vector<double>>();
    nb.conditionals = j.at("conditionals").get<std::vector<std::vector<double>>>();
    if (nb.priors.size() != nb.senses.size() || nb.conditionals.size() != features.size()) {
      throw Error("naive Bayes model dimensions disagree with its feature set");
    }
    for (const auto& row : nb.conditionals) {
      if (row.size() != nb.senses.size()) throw Error("naive Bayes conditional row has wrong size");
    }
    return nb;
  }
  if (kind == "majority") {
    return MajorityModel{j.at("sense").get<std::string>(), j.at("tie_broken").get<bool>()};
  }
  throw Error("unknown model kind \"" + kind + "\"");
}

}  // namespace

std::string to_json(const ModelFile& file) {
  const json j{{"format", "bigram-wsd-model/1"},
               {"feature_set", feature_set_json(file.features)},
               {"model", model_json(file.model)}};
  return j.dump(2);
}

ModelFile model_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != "bigram-wsd-model/1") {
      throw Error("unsupported model format");
    }
    ModelFile file;
    file.features = feature_set_from(j.at("feature_set"));
    file.model = model_from(j.at("model"), file.features);
    return file;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed model file: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path, const ModelFile& file) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json(file) << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

}  // namespace bigram_wsd
