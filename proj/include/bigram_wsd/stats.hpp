#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bigram_wsd/corpus.hpp"

namespace bigram_wsd {

/// Two consecutive tokens.
struct Bigram {
  std::string first;
  std::string second;

  auto operator<=>(const Bigram&) const = default;
  bool operator==(const Bigram&) const = default;

  /// "w1 w2"
  std::string label() const { return first + ' ' + second; }
};

struct BigramHash {
  std::size_t operator()(const Bigram& b) const noexcept {
    const std::size_t h1 = std::hash<std::string>{}(b.first);
    const std::size_t h2 = std::hash<std::string>{}(b.second);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

/// Corpus-wide bigram frequencies with first/second-word marginals.
///
/// Merging is associative and commutative, so shards of a corpus can be
/// counted independently and combined.
struct BigramCounts {
  std::unordered_map<Bigram, std::uint64_t, BigramHash> pair_count;   // n11 per bigram
  std::unordered_map<std::string, std::uint64_t> first_marginal;      // n1+ per word
  std::unordered_map<std::string, std::uint64_t> second_marginal;     // n+1 per word
  std::uint64_t total = 0;                                            // n++

  void add(const std::string& first, const std::string& second, std::uint64_t count = 1);
  void merge(const BigramCounts& other);

  std::uint64_t frequency(const Bigram& bigram) const;
  std::uint64_t first_count(const std::string& word) const;
  std::uint64_t second_count(const std::string& word) const;

  /// Throws InvariantError if the sum identities or the n11 <= marginal bounds fail.
  void validate() const;

  bool operator==(const BigramCounts&) const = default;
};

/// Counts adjacent token pairs within each instance (never across instances).
BigramCounts count_bigrams(std::span<const Instance> instances);

/// 2x2 table of bigram counts.
///
///              w2      not w2
///     w1      n11       n12    | n1+
///     not w1  n21       n22    | n2+
///             n+1       n+2    | n++
struct ContingencyTable {
  std::uint64_t n11 = 0;
  std::uint64_t n12 = 0;
  std::uint64_t n21 = 0;
  std::uint64_t n22 = 0;

  std::uint64_t n1p() const noexcept { return n11 + n12; }
  std::uint64_t n2p() const noexcept { return n21 + n22; }
  std::uint64_t np1() const noexcept { return n11 + n21; }
  std::uint64_t np2() const noexcept { return n12 + n22; }
  std::uint64_t npp() const noexcept { return n11 + n12 + n21 + n22; }

  /// Builds a table from n11 and its marginals; throws InvariantError on a negative cell.
  static ContingencyTable from_marginals(std::uint64_t n11, std::uint64_t n1p, std::uint64_t np1,
                                         std::uint64_t npp);

  ContingencyTable transposed() const noexcept { return {n11, n21, n12, n22}; }

  bool operator==(const ContingencyTable&) const = default;
};

ContingencyTable contingency(const Bigram& bigram, const BigramCounts& counts);

/// Counts expected under independence: m_ij = n_i+ * n_+j / n_++.
struct ExpectedTable {
  double m11 = 0;
  double m12 = 0;
  double m21 = 0;
  double m22 = 0;
};

/// Throws Error when the table is empty (n++ = 0).
ExpectedTable expected(const ContingencyTable& table);

/// Log-likelihood ratio statistic, natural log; zero cells contribute 0.
double g_squared(const ContingencyTable& table);

/// Pearson's chi-squared statistic, without continuity correction.
double x_squared(const ContingencyTable& table);

/// Tabulated ln(k!) for k in [0, n].
class LogFactorials {
 public:
  explicit LogFactorials(std::uint64_t n);

  double operator()(std::uint64_t k) const { return table_.at(k); }
  std::uint64_t size() const noexcept { return table_.size(); }

 private:
  std::vector<double> table_;
};

/// Right-tailed Fisher exact test: P(N11 >= n11) under the hypergeometric
/// distribution with the table's marginals fixed.
double fisher_exact(const ContingencyTable& table);

/// Natural log of fisher_exact. Stays finite where the p-value underflows.
/// `log_factorials` must cover at least n++.
double fisher_exact_log(const ContingencyTable& table, const LogFactorials& log_factorials);
double fisher_exact_log(const ContingencyTable& table);

/// log2(n11 * n++ / (n+1 * n1+)); nullopt when n11 = 0.
std::optional<double> pmi(const ContingencyTable& table);

/// 2 * n11 / (n+1 + n1+); nullopt when both marginals are 0.
std::optional<double> dice(const ContingencyTable& table);

enum class Measure { G2, X2, Fisher, Dice, Pmi };

std::string_view measure_tag(Measure measure);
/// Accepts g2, x2, fisher, dice, pmi.
Measure parse_measure(std::string_view tag);

/// A bigram with its frequency and one association score.
struct ScoredBigram {
  Bigram bigram;
  std::uint64_t frequency = 0;  // n11
  std::uint64_t first_count = 0;   // n1+
  std::uint64_t second_count = 0;  // n+1
  double score = 0;  // p-value for Fisher
  Measure measure = Measure::G2;
  /// Larger is more strongly associated: the score itself, or -ln(p) for Fisher.
  double sort_key = 0;

  bool operator==(const ScoredBigram&) const = default;
};

/// Scores one table. Returns nullopt where the measure is undefined.
std::optional<ScoredBigram> score_bigram(const Bigram& bigram, const BigramCounts& counts,
                                         Measure measure, const LogFactorials* log_factorials);

/// Orders best-first: sort_key desc, then frequency desc, first word asc, second word asc.
bool ranks_before(const ScoredBigram& a, const ScoredBigram& b) noexcept;

/// Bigrams with frequency >= min_freq, scored and ranked best-first, cut at
/// top_k but keeping every bigram tied with the top_k-th score.
std::vector<ScoredBigram> rank_bigrams(const BigramCounts& counts, Measure measure,
                                       std::uint64_t min_freq, std::size_t top_k);

/// Applies the tie-inclusive top-k cut to an already ranked list.
void cut_ranked(std::vector<ScoredBigram>& ranked, std::size_t top_k);

struct AgreementReport {
  bool agree = true;
  /// Bigrams whose position differs between the G2, X2 and Fisher rankings
  /// (or which are missing from one of them), sorted.
  std::vector<Bigram> divergent_bigrams;
  /// Fisher ranking when any divergence was found, G2 ranking otherwise.
  std::vector<ScoredBigram> canonical;
  Measure canonical_measure = Measure::G2;
};

/// Compares the G2, X2 and Fisher rankings of the same candidate set.
AgreementReport agreement_check(const BigramCounts& counts, std::uint64_t min_freq,
                                std::size_t top_k);

}  // namespace bigram_wsd
