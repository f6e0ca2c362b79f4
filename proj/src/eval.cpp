#include "bigram_wsd/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "bigram_wsd/error.hpp"

namespace bigram_wsd {

Accuracy score(const std::map<std::string, std::string>& predictions,
               const std::map<std::string, std::string>& gold) {
  Accuracy accuracy;
  accuracy.total = gold.size();
  for (const auto& [id, sense] : gold) {
    const auto it = predictions.find(id);
    if (it == predictions.end()) throw Error("no prediction for instance \"" + id + "\"");
    if (it->second == sense) ++accuracy.correct;
  }
  for (const auto& entry : predictions) {
    if (!gold.contains(entry.first)) {
      throw Error("prediction for unknown instance \"" + entry.first + "\"");
    }
  }
  return accuracy;
}

double pr_to_accuracy(double precision, double recall) { return precision * recall; }

std::string Comparison::str() const {
  return std::to_string(wins) + "-" + std::to_string(ties) + "-" + std::to_string(losses);
}

Comparison win_tie_loss(const std::map<std::string, double>& a,
                        const std::map<std::string, double>& b, double epsilon,
                        std::string method_a, std::string method_b) {
  if (a.size() != b.size() ||
      !std::equal(a.begin(), a.end(), b.begin(),
                  [](const auto& x, const auto& y) { return x.first == y.first; })) {
    throw Error("win-tie-loss needs the same task set for " + method_a + " and " + method_b);
  }
  Comparison result{std::move(method_a), std::move(method_b), 0, 0, 0};
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    const double diff = ia->second - ib->second;
    if (diff > epsilon) {
      ++result.wins;
    } else if (-diff > epsilon) {
      ++result.losses;
    } else {
      ++result.ties;
    }
  }
  return result;
}

const TaskResult* TaskSummary::find(std::string_view method) const {
  for (const auto& result : results) {
    if (result.method == method) return &result;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Reference scores

ReferenceTable load_reference(std::istream& in) {
  ReferenceTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line_no == 1 && line.starts_with("word-pos")) continue;

    std::istringstream fields(line);
    std::string word_pos;
    ReferenceScores scores;
    if (!(fields >> word_pos >> scores.best_precision >> scores.best_recall >>
          scores.avg_precision >> scores.avg_recall)) {
      throw ParseError(line_no, "expected word-pos and four numbers");
    }
    for (const double value : {scores.best_precision, scores.best_recall, scores.avg_precision,
                               scores.avg_recall}) {
      if (!(value >= 0.0 && value <= 1.0)) {
        throw ParseError(line_no, "precision and recall must be fractions in [0, 1]");
      }
    }
    if (!table.emplace(word_pos, scores).second) {
      throw ParseError(line_no, "duplicate task \"" + word_pos + "\"");
    }
  }
  return table;
}

ReferenceTable load_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_reference(in);
}

// ---------------------------------------------------------------------------
// Reports

namespace {

int pos_rank(char pos) {
  switch (pos) {
    case 'n': return 0;
    case 'v': return 1;
    case 'a': return 2;
    default: return 3;
  }
}

std::string percent(double fraction) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1f", 100.0 * fraction);
  return buffer;
}

constexpr std::string_view kTreeColumns[] = {kTreePow, kStumpPow, kTreeDice, kStumpDice,
                                             kNaiveBayes};

enum class ColumnKind { Method, Best, Avg };

struct Column {
  std::string name;
  ColumnKind kind;
};

std::vector<Column> result_columns(const std::vector<TaskSummary>& tasks,
                                   const ReferenceTable* reference) {
  const auto any_ran = [&](std::string_view method) {
    return std::any_of(tasks.begin(), tasks.end(),
                       [&](const TaskSummary& t) { return t.find(method) != nullptr; });
  };
  std::vector<Column> columns;
  if (any_ran(kMajority)) columns.push_back({std::string(kMajority), ColumnKind::Method});
  if (reference) {
    columns.push_back({"best", ColumnKind::Best});
    columns.push_back({"avg", ColumnKind::Avg});
  }
  for (const auto method : kTreeColumns) {
    if (any_ran(method)) columns.push_back({std::string(method), ColumnKind::Method});
  }
  return columns;
}

std::optional<double> column_value(const TaskSummary& task, const Column& column,
                                   const ReferenceTable* reference) {
  if (task.failure) return std::nullopt;
  if (column.kind == ColumnKind::Method) {
    const TaskResult* result = task.find(column.name);
    if (!result) return std::nullopt;
    return result->accuracy.value();
  }
  if (!reference) return std::nullopt;
  const auto it = reference->find(task.word_pos());
  if (it == reference->end()) return std::nullopt;
  return column.kind == ColumnKind::Best ? it->second.best() : it->second.avg();
}

std::optional<Comparison> compare_column(const std::vector<TaskSummary>& tasks,
                                         const Column& column, const ReferenceTable* reference) {
  const Column pivot{std::string(kTreePow), ColumnKind::Method};
  std::map<std::string, double> a, b;
  for (const auto& task : tasks) {
    const auto x = column_value(task, pivot, reference);
    const auto y = column_value(task, column, reference);
    if (x && y) {
      a.emplace(task.word_pos(), *x);
      b.emplace(task.word_pos(), *y);
    }
  }
  if (a.empty()) return std::nullopt;
  return win_tie_loss(a, b, 0.0, std::string(kTreePow), column.name);
}

}  // namespace

std::vector<TaskSummary> report_order(std::vector<TaskSummary> tasks) {
  std::stable_sort(tasks.begin(), tasks.end(), [](const TaskSummary& x, const TaskSummary& y) {
    if (pos_rank(x.pos) != pos_rank(y.pos)) return pos_rank(x.pos) < pos_rank(y.pos);
    return x.word < y.word;
  });
  return tasks;
}

std::vector<Comparison> footer_comparisons(const std::vector<TaskSummary>& tasks,
                                           const ReferenceTable* reference) {
  std::vector<Comparison> comparisons;
  for (const auto& column : result_columns(tasks, reference)) {
    if (column.name == kTreePow) continue;
    if (auto comparison = compare_column(tasks, column, reference)) {
      comparisons.push_back(std::move(*comparison));
    }
  }
  return comparisons;
}

std::string format_results(const std::vector<TaskSummary>& unordered,
                           const ReferenceTable* reference) {
  const auto tasks = report_order(unordered);
  const auto columns = result_columns(tasks, reference);
  std::ostringstream out;

  out << "word-pos\ttest\tsenses\ttrain";
  for (const auto& column : columns) out << '\t' << column.name;
  out << '\n';

  for (const auto& task : tasks) {
    out << task.word_pos();
    if (task.failure) {
      out << "\tFAILED: " << *task.failure << '\n';
      continue;
    }
    out << '\t' << task.n_test << '\t' << task.test_senses << '\t' << task.n_train;
    for (const auto& column : columns) {
      const auto value = column_value(task, column, reference);
      out << '\t' << (value ? percent(*value) : "-");
    }
    out << '\n';
  }

  out << "win-tie-loss (" << kTreePow << " vs. X)\t\t\t";
  const bool pivot_ran = std::any_of(columns.begin(), columns.end(),
                                     [](const Column& c) { return c.name == kTreePow; });
  for (const auto& column : columns) {
    out << '\t';
    if (!pivot_ran || column.name == kTreePow) continue;
    if (const auto comparison = compare_column(tasks, column, reference)) out << comparison->str();
  }
  out << '\n';
  return out.str();
}

std::string format_trees(const std::vector<TaskSummary>& unordered) {
  const auto tasks = report_order(unordered);
  std::ostringstream out;
  out << "word-pos\tpow-stump\tpow-leaf/total\tpow-features\tdice-stump\tdice-leaf/total"
         "\tdice-features\n";
  for (const auto& task : tasks) {
    out << task.word_pos();
    if (task.failure) {
      out << "\tFAILED\n";
      continue;
    }
    for (const auto method : {kTreePow, kTreeDice}) {
      const TaskResult* result = task.find(method);
      if (!result || !result->tree_stats) {
        out << "\t-\t-\t-";
        continue;
      }
      const TreeStats& stats = *result->tree_stats;
      out << '\t' << stats.stump_node_label.value_or("") << '\t' << stats.leaf_total() << '\t'
          << stats.feature_set_size;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_accuracies(const std::vector<TaskSummary>& unordered) {
  const auto tasks = report_order(unordered);
  std::ostringstream out;
  out << "word-pos\tmethod\tcorrect\tn_test\taccuracy\n";
  for (const auto& task : tasks) {
    if (task.failure) continue;
    for (const auto& result : task.results) {
      char value[40];
      std::snprintf(value, sizeof value, "%.17g", result.accuracy.value());
      out << task.word_pos() << '\t' << result.method << '\t' << result.accuracy.correct << '\t'
          << result.accuracy.total << '\t' << value << '\n';
    }
  }
  return out.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace

void emit_report(const std::vector<TaskSummary>& tasks, const ReferenceTable* reference,
                 const std::filesystem::path& out_dir) {
  if (tasks.empty()) throw Error("no task results to report");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());
  write_file(out_dir / "results.tsv", format_results(tasks, reference));
  write_file(out_dir / "trees.tsv", format_trees(tasks));
  write_file(out_dir / "accuracies.tsv", format_accuracies(tasks));
}

}  // namespace bigram_wsd
