// bigram-wsd: rank bigrams, select features, train, predict, evaluate, and
// run multi-task experiments.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bigram_wsd/corpus.hpp"
#include "bigram_wsd/error.hpp"
#include "bigram_wsd/eval.hpp"
#include "bigram_wsd/experiment.hpp"
#include "bigram_wsd/features.hpp"
#include "bigram_wsd/learners.hpp"
#include "bigram_wsd/model_io.hpp"
#include "bigram_wsd/stats.hpp"
#include "bigram_wsd/tsv.hpp"

namespace {

using namespace bigram_wsd;

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

struct SelectionOptions {
  std::size_t top_k = kDefaultTopK;
  std::uint64_t min_freq = kDefaultMinFreq;

  void add_to(CLI::App& app) {
    app.add_option("--top-k", top_k, "Keep the top K bigrams (ties at rank K are kept)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--min-freq", min_freq, "Minimum bigram/word frequency")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
};

struct TreeOptions {
  bool no_prune = false;
  double prune_confidence = 0.25;
  std::size_t min_leaf = 2;

  void add_to(CLI::App& app) {
    app.add_flag("--no-prune", no_prune, "Skip pessimistic error pruning");
    app.add_option("--prune-confidence", prune_confidence, "Pruning confidence level")
        ->check(CLI::Range(1e-6, 0.5))
        ->capture_default_str();
    app.add_option("--min-leaf", min_leaf, "Minimum instances per branch")->capture_default_str();
  }

  TreeConfig config() const { return {min_leaf, prune_confidence, !no_prune}; }
};

FeatureSet select_features(const std::vector<Instance>& train, const std::string& measure,
                           const SelectionOptions& options) {
  if (measure == "unigram") return select_unigram_features(train, options.min_freq);
  return select_bigram_features(train, parse_selection(measure), options.top_k, options.min_freq);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigram-feature word sense disambiguation toolkit"};
  app.require_subcommand(1);

  // rank
  auto* rank = app.add_subcommand("rank", "Rank training-corpus bigrams by an association measure");
  std::string rank_train, rank_measure = "g2", rank_out;
  SelectionOptions rank_selection;
  rank->add_option("--train", rank_train, "Training data (JSON lines)")->required();
  rank->add_option("--measure", rank_measure, "g2, x2, fisher, dice, pmi or power_divergence")
      ->capture_default_str();
  rank->add_option("-o,--out", rank_out, "Output TSV (default stdout)");
  rank_selection.add_to(*rank);

  // features
  auto* features = app.add_subcommand("features", "Select a feature set from training data");
  std::string features_train, features_measure = "power_divergence", features_out;
  SelectionOptions features_selection;
  features->add_option("--train", features_train, "Training data (JSON lines)")->required();
  features->add_option("--measure", features_measure, "power_divergence, dice or unigram")
      ->capture_default_str();
  features->add_option("-o,--out", features_out, "Output TSV (default stdout)");
  features_selection.add_to(*features);

  // train
  auto* train = app.add_subcommand("train", "Train a classifier and write it as JSON");
  std::string train_data, train_learner = "tree", train_measure = "power_divergence", model_out;
  SelectionOptions train_selection;
  TreeOptions train_tree_options;
  train->add_option("--train", train_data, "Training data (JSON lines)")->required();
  train->add_option("--learner", train_learner, "tree, stump, nb or majority")
      ->capture_default_str();
  train->add_option("--measure", train_measure, "power_divergence or dice (tree and stump)")
      ->capture_default_str();
  train->add_option("--model", model_out, "Model output path")->required();
  train_selection.add_to(*train);
  train_tree_options.add_to(*train);

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "Assign senses with a trained model");
  std::string model_in, predict_input, predict_out;
  predict_cmd->add_option("--model", model_in, "Model JSON")->required();
  predict_cmd->add_option("--input", predict_input, "Instances (JSON lines)")->required();
  predict_cmd->add_option("-o,--out", predict_out, "Output TSV id<TAB>sense (default stdout)");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score predictions against gold senses");
  std::string predictions_path, gold_path;
  evaluate->add_option("--predictions", predictions_path, "Predictions TSV")->required();
  evaluate->add_option("--gold", gold_path, "Gold-labeled instances (JSON lines)")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a multi-task experiment");
  std::string config_path, manifest_path, reference_path, out_dir, learners_list;
  std::vector<std::string> measures;
  SelectionOptions experiment_selection;
  TreeOptions experiment_tree_options;
  std::size_t jobs = 1;
  experiment->add_option("--config", config_path, "key = value config file");
  experiment->add_option("--manifest", manifest_path, "Task manifest TSV");
  experiment->add_option("--measure", measures, "power_divergence and/or dice")->delimiter(',');
  experiment->add_option("--learners", learners_list, "Comma list of tree, stump, nb, majority");
  experiment->add_option("--jobs", jobs, "Tasks to run concurrently")->check(CLI::PositiveNumber);
  experiment->add_option("--reference", reference_path, "Published best/avg precision-recall TSV");
  experiment->add_option("--out-dir", out_dir, "Report directory");
  experiment_selection.add_to(*experiment);
  experiment_tree_options.add_to(*experiment);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*rank) {
      const auto instances = load_dataset(std::filesystem::path(rank_train));
      const BigramCounts counts = count_bigrams(instances);
      std::vector<ScoredBigram> ranked;
      if (rank_measure == "power_divergence") {
        ranked = agreement_check(counts, rank_selection.min_freq, rank_selection.top_k).canonical;
      } else {
        ranked = rank_bigrams(counts, parse_measure(rank_measure), rank_selection.min_freq,
                              rank_selection.top_k);
      }
      emit(rank_out, format_ranked(ranked));
    } else if (*features) {
      const auto instances = load_dataset(std::filesystem::path(features_train));
      emit(features_out,
           format_feature_set(select_features(instances, features_measure, features_selection)));
    } else if (*train) {
      const auto instances = load_dataset(std::filesystem::path(train_data));
      const Learner learner = parse_learner(train_learner);
      ModelFile file;
      switch (learner) {
        case Learner::Tree:
        case Learner::Stump: {
          file.features = select_features(instances, train_measure, train_selection);
          const auto vectors = vectorize_all(instances, file.features);
          const TreeConfig config = train_tree_options.config();
          file.model = learner == Learner::Tree ? train_tree(file.features, vectors, config)
                                                : train_stump(file.features, vectors, config);
          const TreeStats stats = tree_stats(std::get<TreeModel>(file.model));
          std::cerr << "stump node: " << stats.stump_node_label.value_or("(none)")
                    << "  leaf/total: " << stats.leaf_total()
                    << "  features: " << stats.feature_set_size << '\n';
          break;
        }
        case Learner::NaiveBayes: {
          file.features = select_unigram_features(instances, train_selection.min_freq);
          file.model = train_naive_bayes(file.features, vectorize_all(instances, file.features));
          break;
        }
        case Learner::Majority:
          file.model = train_majority(std::span<const Instance>(instances));
          break;
      }
      save_model(model_out, file);
    } else if (*predict_cmd) {
      const ModelFile file = load_model(model_in);
      const auto instances = load_dataset(std::filesystem::path(predict_input));
      const auto vectors = vectorize_all(instances, file.features);
      std::vector<std::pair<std::string, std::string>> rows;
      rows.reserve(vectors.size());
      for (const auto& vector : vectors) rows.emplace_back(vector.instance_id, predict(file.model, vector));
      std::ostringstream out;
      write_predictions(out, rows);
      emit(predict_out, out.str());
    } else if (*evaluate) {
      std::ifstream in(predictions_path);
      if (!in) throw Error("cannot open " + predictions_path);
      const auto predictions = read_predictions(in);
      std::map<std::string, std::string> gold;
      for (const auto& instance : load_dataset(std::filesystem::path(gold_path))) {
        if (!instance.sense) throw Error("gold instance \"" + instance.id + "\" has no sense");
        gold.emplace(instance.id, *instance.sense);
      }
      const Accuracy accuracy = score(predictions, gold);
      std::cout << "accuracy\t" << accuracy.value() << '\t' << accuracy.correct << '/'
                << accuracy.total << '\n';
    } else if (*experiment) {
      ExperimentConfig config;
      if (!config_path.empty()) config = load_config(config_path);
      const std::filesystem::path cwd = ".";
      if (!manifest_path.empty()) apply_setting(config, "manifest", manifest_path, cwd);
      if (!measures.empty()) {
        config.measures.clear();
        for (const auto& m : measures) config.measures.push_back(parse_selection(m));
      }
      if (!learners_list.empty()) apply_setting(config, "learners", learners_list, cwd);
      if (experiment->count("--top-k")) config.top_k = experiment_selection.top_k;
      if (experiment->count("--min-freq")) config.min_freq = experiment_selection.min_freq;
      if (experiment->count("--no-prune")) config.tree.prune = false;
      if (experiment->count("--prune-confidence")) {
        config.tree.prune_confidence = experiment_tree_options.prune_confidence;
      }
      if (experiment->count("--min-leaf")) config.tree.min_leaf = experiment_tree_options.min_leaf;
      if (experiment->count("--jobs")) config.jobs = jobs;
      if (!reference_path.empty()) config.reference = reference_path;
      if (!out_dir.empty()) config.out_dir = out_dir;

      const ExperimentOutcome outcome = run_experiment(config);
      for (const auto& task : outcome.tasks) {
        if (task.failure) std::cerr << "FAILED " << *task.failure << '\n';
      }
      std::cerr << outcome.tasks.size() - outcome.failures << "/" << outcome.tasks.size()
                << " tasks completed; reports in " << config.out_dir.string() << '\n';
      return outcome.failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
