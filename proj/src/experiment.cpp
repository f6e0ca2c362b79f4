#include "bigram_wsd/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <omp.h>

#include "bigram_wsd/error.hpp"

namespace bigram_wsd {

std::string_view learner_tag(Learner learner) {
  switch (learner) {
    case Learner::Tree: return "tree";
    case Learner::Stump: return "stump";
    case Learner::NaiveBayes: return "nb";
    case Learner::Majority: return "majority";
  }
  return "?";
}

Learner parse_learner(std::string_view tag) {
  if (tag == "tree") return Learner::Tree;
  if (tag == "stump") return Learner::Stump;
  if (tag == "nb" || tag == "naive_bayes") return Learner::NaiveBayes;
  if (tag == "majority" || tag == "maj") return Learner::Majority;
  throw Error("unknown learner \"" + std::string(tag) + "\" (expected tree, stump, nb or majority)");
}

void ExperimentConfig::validate() const {
  if (tasks.empty()) throw Error("experiment has no tasks");
  if (top_k < 1) throw Error("top_k must be at least 1");
  if (min_freq < 1) throw Error("min_freq must be at least 1");
  if (jobs < 1) throw Error("jobs must be at least 1");
  if (learners.empty()) throw Error("no learners selected");
  if (!(tree.prune_confidence > 0.0 && tree.prune_confidence <= 0.5)) {
    throw Error("prune_confidence must lie in (0, 0.5]");
  }
  if (reference && !std::filesystem::exists(*reference)) {
    throw Error("reference file not found: " + reference->string());
  }
}

// ---------------------------------------------------------------------------
// Manifest and config files

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(separator, start);
    parts.push_back(trim(s.substr(start, at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path path{std::string(value)};
  return path.is_absolute() ? path : base / path;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T result{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), result);
  if (ec != std::errc() || end != value.data() + value.size()) {
    throw Error("invalid value \"" + std::string(value) + "\" for " + std::string(key));
  }
  return result;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw Error("invalid boolean \"" + std::string(value) + "\" for " + std::string(key));
}

}  // namespace

std::vector<TaskSpec> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest " + path.string());
  const auto base = path.parent_path();
  std::vector<TaskSpec> tasks;
  std::set<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto fields = split(content, '\t');
    if (fields.size() != 4) throw ParseError(line_no, "manifest rows need word, pos, train, test");
    TaskSpec spec{std::string(fields[0]), std::string(fields[1]), resolve(base, fields[2]),
                  resolve(base, fields[3])};
    parse_pos(spec.pos);
    if (!names.insert(spec.name()).second) {
      throw ParseError(line_no, "duplicate task " + spec.name());
    }
    tasks.push_back(std::move(spec));
  }
  return tasks;
}

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir) {
  if (key == "manifest") {
    config.tasks = load_manifest(resolve(base_dir, value));
  } else if (key == "measures") {
    config.measures.clear();
    for (const auto tag : split(value, ',')) config.measures.push_back(parse_selection(tag));
  } else if (key == "learners") {
    config.learners.clear();
    for (const auto tag : split(value, ',')) config.learners.push_back(parse_learner(tag));
  } else if (key == "top_k") {
    config.top_k = parse_number<std::size_t>(key, value);
  } else if (key == "min_freq") {
    config.min_freq = parse_number<std::uint64_t>(key, value);
  } else if (key == "prune") {
    config.tree.prune = parse_bool(key, value);
  } else if (key == "prune_confidence") {
    config.tree.prune_confidence = parse_number<double>(key, value);
  } else if (key == "min_leaf") {
    config.tree.min_leaf = parse_number<std::size_t>(key, value);
  } else if (key == "jobs") {
    config.jobs = parse_number<std::size_t>(key, value);
  } else if (key == "out_dir") {
    config.out_dir = resolve(base_dir, value);
  } else if (key == "reference") {
    config.reference = resolve(base_dir, value);
  } else {
    throw Error("unknown config key \"" + std::string(key) + "\"");
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  ExperimentConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    try {
      apply_setting(config, trim(content.substr(0, eq)), trim(content.substr(eq + 1)),
                    path.parent_path());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return config;
}

// ---------------------------------------------------------------------------
// Running

namespace {

template <typename ModelT>
Accuracy evaluate(const ModelT& model, const std::vector<FeatureVector>& test,
                  const std::map<std::string, std::string>& gold) {
  std::map<std::string, std::string> predictions;
  for (const auto& vector : test) predictions.emplace(vector.instance_id, predict(model, vector));
  return score(predictions, gold);
}

std::string_view tree_method(SelectionMeasure measure) {
  return measure == SelectionMeasure::PowerDivergence ? kTreePow : kTreeDice;
}

std::string_view stump_method(SelectionMeasure measure) {
  return measure == SelectionMeasure::PowerDivergence ? kStumpPow : kStumpDice;
}

}  // namespace

TaskSummary run_task(const ExperimentConfig& config, const Task& task) {
  const auto wants = [&](Learner learner) {
    return std::find(config.learners.begin(), config.learners.end(), learner) !=
           config.learners.end();
  };

  TaskSummary summary;
  summary.word = task.word;
  summary.pos = pos_tag(task.pos);
  summary.n_train = task.train.size();
  summary.n_test = task.test.size();

  std::map<std::string, std::string> gold;
  std::set<std::string> test_senses;
  for (const auto& instance : task.test) {
    if (!instance.sense) throw Error("test instance \"" + instance.id + "\" has no gold sense");
    gold.emplace(instance.id, *instance.sense);
    test_senses.insert(*instance.sense);
  }
  summary.test_senses = test_senses.size();

  const auto add = [&](std::string_view method, Accuracy accuracy,
                       std::optional<TreeStats> stats = std::nullopt) {
    summary.results.push_back({summary.word_pos(), std::string(method), accuracy, std::move(stats)});
  };

  if (wants(Learner::Tree) || wants(Learner::Stump)) {
    for (const SelectionMeasure measure : config.measures) {
      const FeatureSet features =
          select_bigram_features(task.train, measure, config.top_k, config.min_freq);
      const auto train = vectorize_all(task.train, features);
      const auto test = vectorize_all(task.test, features);
      if (wants(Learner::Tree)) {
        const TreeModel tree = train_tree(features, train, config.tree);
        add(tree_method(measure), evaluate(tree, test, gold), tree_stats(tree));
      }
      if (wants(Learner::Stump)) {
        const TreeModel stump = train_stump(features, train, config.tree);
        add(stump_method(measure), evaluate(stump, test, gold));
      }
    }
  }
  if (wants(Learner::NaiveBayes)) {
    const FeatureSet words = select_unigram_features(task.train, config.min_freq);
    const auto train = vectorize_all(task.train, words);
    const auto test = vectorize_all(task.test, words);
    add(kNaiveBayes, evaluate(train_naive_bayes(words, train), test, gold));
  }
  if (wants(Learner::Majority)) {
    const MajorityModel majority = train_majority(task.train);
    const FeatureVector empty;
    std::map<std::string, std::string> predictions;
    for (const auto& entry : gold) predictions.emplace(entry.first, predict(majority, empty));
    add(kMajority, score(predictions, gold));
  }
  return summary;
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::optional<ReferenceTable> reference;
  if (config.reference) reference = load_reference(*config.reference);

  const std::size_t n = config.tasks.size();
  std::vector<TaskSummary> summaries(n);
  const auto run_one = [&](std::size_t i) {
    const TaskSpec& spec = config.tasks[i];
    try {
      const Task task = load_task(spec.word, spec.pos, spec.train, spec.test);
      summaries[i] = run_task(config, task);
    } catch (const std::exception& e) {
      summaries[i].word = spec.word;
      summaries[i].pos = spec.pos.empty() ? 'p' : spec.pos.front();
      summaries[i].failure = spec.name() + ": " + e.what();
    }
  };

  const auto threads = static_cast<int>(std::min(config.jobs, std::max<std::size_t>(n, 1)));
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    run_one(static_cast<std::size_t>(i));
  }

  ExperimentOutcome outcome;
  outcome.tasks = report_order(std::move(summaries));
  for (const auto& task : outcome.tasks) {
    if (task.failure) ++outcome.failures;
  }
  emit_report(outcome.tasks, reference ? &*reference : nullptr, config.out_dir);
  return outcome;
}

}  // namespace bigram_wsd
