#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigram_wsd/corpus.hpp"
#include "bigram_wsd/eval.hpp"
#include "bigram_wsd/features.hpp"
#include "bigram_wsd/learners.hpp"

namespace bigram_wsd {

enum class Learner { Tree, Stump, NaiveBayes, Majority };

std::string_view learner_tag(Learner learner);
/// Accepts tree, stump, nb (alias naive_bayes), majority (alias maj).
Learner parse_learner(std::string_view tag);

/// One row of the task manifest.
struct TaskSpec {
  std::string word;
  std::string pos;
  std::filesystem::path train;
  std::filesystem::path test;

  std::string name() const { return word + "-" + pos; }
};

struct ExperimentConfig {
  std::vector<TaskSpec> tasks;
  std::vector<SelectionMeasure> measures{SelectionMeasure::PowerDivergence,
                                         SelectionMeasure::Dice};
  std::vector<Learner> learners{Learner::Tree, Learner::Stump, Learner::NaiveBayes,
                                Learner::Majority};
  std::size_t top_k = kDefaultTopK;
  std::uint64_t min_freq = kDefaultMinFreq;
  TreeConfig tree;
  std::size_t jobs = 1;
  std::filesystem::path out_dir = "results";
  std::optional<std::filesystem::path> reference;

  /// Throws Error on invalid parameters. Missing task files are reported per
  /// task by run_experiment instead, so one bad task does not stop the rest.
  void validate() const;
};

/// Tab-separated: word, pos, train path, test path. Relative paths resolve
/// against the manifest's directory; '#' starts a comment line.
std::vector<TaskSpec> load_manifest(const std::filesystem::path& path);

/// Flat "key = value" file (see docs/formats.md). Relative paths resolve
/// against the config file's directory.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies one "key = value" setting; used by load_config and for tests.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir);

/// Runs every configured measure/learner on one task. Feature selection and
/// training only ever see the training data; the test data is first touched
/// when the trained models are applied.
TaskSummary run_task(const ExperimentConfig& config, const Task& task);

struct ExperimentOutcome {
  std::vector<TaskSummary> tasks;  // report order
  std::size_t failures = 0;
};

/// Runs all tasks (up to config.jobs concurrently) and writes the reports.
/// Output does not depend on the number of jobs.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

}  // namespace bigram_wsd
