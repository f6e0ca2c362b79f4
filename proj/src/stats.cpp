#include "bigram_wsd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bigram_wsd/error.hpp"
#include "bigram_wsd/kernels.hpp"

namespace bigram_wsd {

// ---------------------------------------------------------------------------
// BigramCounts

void BigramCounts::add(const std::string& first, const std::string& second, std::uint64_t count) {
  pair_count[Bigram{first, second}] += count;
  first_marginal[first] += count;
  second_marginal[second] += count;
  total += count;
}

void BigramCounts::merge(const BigramCounts& other) {
  for (const auto& [bigram, count] : other.pair_count) pair_count[bigram] += count;
  for (const auto& [word, count] : other.first_marginal) first_marginal[word] += count;
  for (const auto& [word, count] : other.second_marginal) second_marginal[word] += count;
  total += other.total;
}

std::uint64_t BigramCounts::frequency(const Bigram& bigram) const {
  const auto it = pair_count.find(bigram);
  return it == pair_count.end() ? 0 : it->second;
}

std::uint64_t BigramCounts::first_count(const std::string& word) const {
  const auto it = first_marginal.find(word);
  return it == first_marginal.end() ? 0 : it->second;
}

std::uint64_t BigramCounts::second_count(const std::string& word) const {
  const auto it = second_marginal.find(word);
  return it == second_marginal.end() ? 0 : it->second;
}

void BigramCounts::validate() const {
  std::uint64_t pairs = 0, firsts = 0, seconds = 0;
  for (const auto& [bigram, count] : pair_count) {
    pairs += count;
    if (count > first_count(bigram.first) || count > second_count(bigram.second)) {
      throw InvariantError("bigram \"" + bigram.label() + "\" exceeds its marginal counts");
    }
  }
  for (const auto& entry : first_marginal) firsts += entry.second;
  for (const auto& entry : second_marginal) seconds += entry.second;
  if (pairs != total || firsts != total || seconds != total) {
    throw InvariantError("bigram count sums disagree with total " + std::to_string(total));
  }
}

BigramCounts count_bigrams(std::span<const Instance> instances) {
  return kernels::count_bigrams(instances);
}

// ---------------------------------------------------------------------------
// Tables

ContingencyTable ContingencyTable::from_marginals(std::uint64_t n11, std::uint64_t n1p,
                                                  std::uint64_t np1, std::uint64_t npp) {
  if (n11 > n1p || n11 > np1 || n1p + np1 - n11 > npp) {
    throw InvariantError("inconsistent contingency table: n11=" + std::to_string(n11) +
                         " n1+=" + std::to_string(n1p) + " n+1=" + std::to_string(np1) +
                         " n++=" + std::to_string(npp));
  }
  return {n11, n1p - n11, np1 - n11, npp - n1p - np1 + n11};
}

ContingencyTable contingency(const Bigram& bigram, const BigramCounts& counts) {
  return ContingencyTable::from_marginals(counts.frequency(bigram), counts.first_count(bigram.first),
                                          counts.second_count(bigram.second), counts.total);
}

ExpectedTable expected(const ContingencyTable& table) {
  const auto npp = static_cast<double>(table.npp());
  if (table.npp() == 0) throw Error("expected counts undefined for an empty table");
  const auto n1p = static_cast<double>(table.n1p());
  const auto n2p = static_cast<double>(table.n2p());
  const auto np1 = static_cast<double>(table.np1());
  const auto np2 = static_cast<double>(table.np2());
  return {n1p * np1 / npp, n1p * np2 / npp, n2p * np1 / npp, n2p * np2 / npp};
}

namespace {

double g_term(std::uint64_t observed, double expected_count) {
  if (observed == 0) return 0.0;
  const auto n = static_cast<double>(observed);
  return n * std::log(n / expected_count);
}

double x_term(std::uint64_t observed, double expected_count) {
  if (expected_count == 0.0) {
    if (observed != 0) throw InvariantError("observed count in a cell with zero expectation");
    return 0.0;
  }
  const double diff = static_cast<double>(observed) - expected_count;
  return diff * diff / expected_count;
}

}  // namespace

double g_squared(const ContingencyTable& table) {
  const ExpectedTable m = expected(table);
  const double g2 = 2.0 * (g_term(table.n11, m.m11) + g_term(table.n12, m.m12) +
                           g_term(table.n21, m.m21) + g_term(table.n22, m.m22));
  return std::max(g2, 0.0);
}

double x_squared(const ContingencyTable& table) {
  const ExpectedTable m = expected(table);
  return x_term(table.n11, m.m11) + x_term(table.n12, m.m12) + x_term(table.n21, m.m21) +
         x_term(table.n22, m.m22);
}

// ---------------------------------------------------------------------------
// Fisher's exact test

LogFactorials::LogFactorials(std::uint64_t n) : table_(n + 1) {
  for (std::uint64_t k = 0; k <= n; ++k) table_[k] = std::lgamma(static_cast<double>(k) + 1.0);
}

double fisher_exact_log(const ContingencyTable& table, const LogFactorials& lf) {
  const std::uint64_t n1p = table.n1p(), n2p = table.n2p(), np1 = table.np1();
  const std::uint64_t npp = table.npp();
  if (npp == 0) throw Error("Fisher's exact test undefined for an empty table");
  if (lf.size() <= npp) throw Error("log-factorial table too small for n++");

  const std::uint64_t k_min = np1 > n2p ? np1 - n2p : 0;
  const std::uint64_t k_max = std::min(n1p, np1);
  if (table.n11 <= k_min) return 0.0;  // the whole support

  const double log_norm = lf(n1p) + lf(n2p) + lf(np1) + lf(table.np2()) - lf(npp);
  const auto log_point = [&](std::uint64_t k) {
    return log_norm - lf(k) - lf(n1p - k) - lf(np1 - k) - lf(n2p - np1 + k);
  };

  // Terms past the mode decrease monotonically; stop once they are negligible.
  constexpr double kNegligible = 60.0;
  double log_max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;  // sum of exp(term - log_max)
  for (std::uint64_t k = table.n11; k <= k_max; ++k) {
    const double term = log_point(k);
    if (term > log_max) {
      sum = sum * std::exp(log_max - term) + 1.0;
      log_max = term;
    } else {
      if (term < log_max - kNegligible) break;
      sum += std::exp(term - log_max);
    }
  }
  return std::min(0.0, log_max + std::log(sum));
}

double fisher_exact_log(const ContingencyTable& table) {
  return fisher_exact_log(table, LogFactorials(table.npp()));
}

double fisher_exact(const ContingencyTable& table) { return std::exp(fisher_exact_log(table)); }

// ---------------------------------------------------------------------------
// Information-theoretic measures

std::optional<double> pmi(const ContingencyTable& table) {
  if (table.n11 == 0) return std::nullopt;
  const double ratio = static_cast<double>(table.n11) * static_cast<double>(table.npp()) /
                       (static_cast<double>(table.np1()) * static_cast<double>(table.n1p()));
  return std::log2(ratio);
}

std::optional<double> dice(const ContingencyTable& table) {
  const std::uint64_t denominator = table.np1() + table.n1p();
  if (denominator == 0) return std::nullopt;
  return 2.0 * static_cast<double>(table.n11) / static_cast<double>(denominator);
}

// ---------------------------------------------------------------------------
// Ranking

std::string_view measure_tag(Measure measure) {
  switch (measure) {
    case Measure::G2: return "g2";
    case Measure::X2: return "x2";
    case Measure::Fisher: return "fisher";
    case Measure::Dice: return "dice";
    case Measure::Pmi: return "pmi";
  }
  return "?";
}

Measure parse_measure(std::string_view tag) {
  if (tag == "g2") return Measure::G2;
  if (tag == "x2") return Measure::X2;
  if (tag == "fisher") return Measure::Fisher;
  if (tag == "dice") return Measure::Dice;
  if (tag == "pmi") return Measure::Pmi;
  throw Error("unknown measure \"" + std::string(tag) + "\" (expected g2, x2, fisher, dice or pmi)");
}

std::optional<ScoredBigram> score_bigram(const Bigram& bigram, const BigramCounts& counts,
                                         Measure measure, const LogFactorials* log_factorials) {
  const ContingencyTable table = contingency(bigram, counts);
  ScoredBigram scored{bigram, table.n11, table.n1p(), table.np1(), 0.0, measure, 0.0};
  switch (measure) {
    case Measure::G2:
      scored.score = scored.sort_key = g_squared(table);
      break;
    case Measure::X2:
      scored.score = scored.sort_key = x_squared(table);
      break;
    case Measure::Fisher: {
      const double log_p =
          log_factorials ? fisher_exact_log(table, *log_factorials) : fisher_exact_log(table);
      scored.score = std::exp(log_p);
      scored.sort_key = -log_p;
      break;
    }
    case Measure::Dice: {
      const auto value = dice(table);
      if (!value) return std::nullopt;
      scored.score = scored.sort_key = *value;
      break;
    }
    case Measure::Pmi: {
      const auto value = pmi(table);
      if (!value) return std::nullopt;
      scored.score = scored.sort_key = *value;
      break;
    }
  }
  return scored;
}

bool ranks_before(const ScoredBigram& a, const ScoredBigram& b) noexcept {
  if (a.sort_key != b.sort_key) return a.sort_key > b.sort_key;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.bigram < b.bigram;
}

void cut_ranked(std::vector<ScoredBigram>& ranked, std::size_t top_k) {
  if (top_k == 0) throw Error("top_k must be at least 1");
  if (ranked.size() <= top_k) return;
  const double threshold = ranked[top_k - 1].sort_key;
  std::size_t keep = top_k;
  while (keep < ranked.size() && ranked[keep].sort_key == threshold) ++keep;
  ranked.resize(keep);
}

std::vector<const Bigram*> candidate_bigrams(const BigramCounts& counts, std::uint64_t min_freq) {
  std::vector<const Bigram*> candidates;
  for (const auto& [bigram, count] : counts.pair_count) {
    if (count >= min_freq) candidates.push_back(&bigram);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Bigram* a, const Bigram* b) { return *a < *b; });
  return candidates;
}

std::vector<ScoredBigram> rank_bigrams(const BigramCounts& counts, Measure measure,
                                       std::uint64_t min_freq, std::size_t top_k) {
  if (min_freq == 0) throw Error("min_freq must be at least 1");
  if (top_k == 0) throw Error("top_k must be at least 1");
  const auto candidates = candidate_bigrams(counts, min_freq);
  auto ranked = kernels::score_candidates(counts, candidates, measure);
  std::sort(ranked.begin(), ranked.end(), ranks_before);
  cut_ranked(ranked, top_k);
  return ranked;
}

AgreementReport agreement_check(const BigramCounts& counts, std::uint64_t min_freq,
                                std::size_t top_k) {
  auto by_g2 = rank_bigrams(counts, Measure::G2, min_freq, top_k);
  auto by_x2 = rank_bigrams(counts, Measure::X2, min_freq, top_k);
  auto by_fisher = rank_bigrams(counts, Measure::Fisher, min_freq, top_k);

  const auto positions = [](const std::vector<ScoredBigram>& ranked) {
    std::unordered_map<Bigram, std::size_t, BigramHash> at;
    for (std::size_t i = 0; i < ranked.size(); ++i) at.emplace(ranked[i].bigram, i);
    return at;
  };
  const auto pos_g2 = positions(by_g2);
  const auto pos_x2 = positions(by_x2);
  const auto pos_fisher = positions(by_fisher);

  const auto position_in = [](const auto& at, const Bigram& bigram) -> std::optional<std::size_t> {
    const auto it = at.find(bigram);
    if (it == at.end()) return std::nullopt;
    return it->second;
  };

  AgreementReport report;
  for (const std::vector<ScoredBigram>* list : {&by_g2, &by_x2, &by_fisher}) {
    for (const auto& entry : *list) {
      const auto g = position_in(pos_g2, entry.bigram);
      const auto x = position_in(pos_x2, entry.bigram);
      const auto f = position_in(pos_fisher, entry.bigram);
      if (!(g == x && x == f)) report.divergent_bigrams.push_back(entry.bigram);
    }
  }
  std::sort(report.divergent_bigrams.begin(), report.divergent_bigrams.end());
  report.divergent_bigrams.erase(
      std::unique(report.divergent_bigrams.begin(), report.divergent_bigrams.end()),
      report.divergent_bigrams.end());

  report.agree = report.divergent_bigrams.empty();
  if (report.agree) {
    report.canonical = std::move(by_g2);
    report.canonical_measure = Measure::G2;
  } else {
    report.canonical = std::move(by_fisher);
    report.canonical_measure = Measure::Fisher;
  }
  return report;
}

}  // namespace bigram_wsd
