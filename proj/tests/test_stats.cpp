#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "bigram_wsd/error.hpp"
#include "bigram_wsd/stats.hpp"
#include "bigram_wsd/tsv.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace bigram_wsd {
namespace {

const ContingencyTable kBigCat{10, 20, 40, 930};

// Computed independently in Python (fractions + math.log) from the cell formulas.
constexpr double kBigCatG2 = 25.438944452141065;
constexpr double kBigCatX2 = 52.26984988243806;
constexpr double kBigCatPmi = 2.736965594166206;
constexpr double kBigCatFisher = 5.519344217682654e-07;

TEST(ContingencyTable, BigCatMarginals) {
  EXPECT_EQ(kBigCat.n1p(), 30u);
  EXPECT_EQ(kBigCat.np1(), 50u);
  EXPECT_EQ(kBigCat.n2p(), 970u);
  EXPECT_EQ(kBigCat.np2(), 950u);
  EXPECT_EQ(kBigCat.npp(), 1000u);
  EXPECT_EQ(ContingencyTable::from_marginals(10, 30, 50, 1000), kBigCat);
}

TEST(ContingencyTable, NegativeCellIsAnInvariantError) {
  EXPECT_THROW(ContingencyTable::from_marginals(10, 5, 50, 1000), InvariantError);
  EXPECT_THROW(ContingencyTable::from_marginals(10, 30, 50, 60), InvariantError);
}

TEST(ContingencyTable, BuiltFromCorpusCounts) {
  const auto corpus = testing::contingency_example_corpus();
  const BigramCounts counts = count_bigrams(corpus);
  EXPECT_EQ(contingency({"big", "cat"}, counts), kBigCat);
}

TEST(Expected, BigCat) {
  const ExpectedTable m = expected(kBigCat);
  EXPECT_DOUBLE_EQ(m.m11, 1.5);
  EXPECT_DOUBLE_EQ(m.m12, 28.5);
  EXPECT_DOUBLE_EQ(m.m21, 48.5);
  EXPECT_DOUBLE_EQ(m.m22, 921.5);
}

TEST(Expected, EmptyTableIsAnError) { EXPECT_THROW(expected({}), Error); }

TEST(Statistics, BigCatValues) {
  EXPECT_NEAR(g_squared(kBigCat), kBigCatG2, 1e-9);
  EXPECT_NEAR(x_squared(kBigCat), kBigCatX2, 1e-9);
  EXPECT_NEAR(*pmi(kBigCat), kBigCatPmi, 1e-12);
  EXPECT_EQ(*dice(kBigCat), 0.25);
  EXPECT_NEAR(fisher_exact(kBigCat), kBigCatFisher, kBigCatFisher * 1e-10);
}

TEST(Statistics, PerfectAssociation) {
  const ContingencyTable t{10, 0, 0, 10};
  EXPECT_NEAR(x_squared(t), 20.0, 1e-12);
  EXPECT_NEAR(g_squared(t), 40.0 * std::log(2.0), 1e-12);
  EXPECT_NEAR(fisher_exact({1, 0, 0, 1}), 0.5, 1e-15);
}

TEST(Statistics, IndependentTableScoresZero) {
  const ContingencyTable t{2, 8, 18, 72};
  EXPECT_NEAR(g_squared(t), 0.0, 1e-12);
  EXPECT_NEAR(x_squared(t), 0.0, 1e-12);
}

TEST(Statistics, PmiUndefinedWithoutJointCount) {
  EXPECT_FALSE(pmi({0, 5, 5, 10}).has_value());
  EXPECT_FALSE(dice({0, 0, 0, 10}).has_value());
  EXPECT_EQ(*dice({0, 5, 5, 10}), 0.0);
}

TEST(Statistics, DiceIsOneOnEveryPerfectTable) {
  for (std::uint64_t k = 1; k <= 100; ++k) {
    EXPECT_EQ(*dice(ContingencyTable::from_marginals(k, k, k, 1000)), 1.0) << k;
  }
}

TEST(Statistics, PmiRewardsRareBigrams) {
  // A single co-occurrence of two hapaxes outscores a strong frequent pair.
  EXPECT_GT(*pmi({1, 0, 0, 999}), *pmi({50, 10, 10, 930}));
  EXPECT_EQ(*dice({1, 0, 0, 999}), 1.0);
}

TEST(Fisher, MatchesRAcrossAWideRange) {
  // p-values of fisher.test(matrix(c(x, 1000, 10, 1000), 2, byrow = TRUE),
  // alternative = "greater") for x = 0..100, from R.
  const double from_r[] = {
      1.000000e+00, 9.995009e-01, 9.967696e-01, 9.886124e-01, 9.710086e-01, 9.403090e-01,
      8.943966e-01, 8.333319e-01, 7.593288e-01, 6.761990e-01, 5.885378e-01, 5.009200e-01,
      4.172848e-01, 3.405813e-01, 2.726612e-01, 2.143576e-01, 1.656755e-01, 1.260236e-01,
      9.444223e-02, 6.979418e-02, 5.090970e-02, 3.668358e-02, 2.613167e-02, 1.841604e-02,
      1.284825e-02, 8.879206e-03, 6.081771e-03, 4.130825e-03, 2.783570e-03, 1.861740e-03,
      1.236419e-03, 8.156574e-04, 5.346868e-04, 3.484045e-04, 2.257325e-04, 1.454637e-04,
      9.325708e-05, 5.949549e-05, 3.778008e-05, 2.388437e-05, 1.503578e-05, 9.427211e-06,
      5.887959e-06, 3.663910e-06, 2.271922e-06, 1.404031e-06, 8.648820e-07, 5.311204e-07,
      3.251928e-07, 1.985425e-07, 1.208873e-07, 7.341252e-08, 4.446997e-08, 2.687285e-08,
      1.620137e-08, 9.745838e-09, 5.849967e-09, 3.504205e-09, 2.094890e-09, 1.249972e-09,
      7.444536e-10, 4.425907e-10, 2.626772e-10, 1.556412e-10, 9.207351e-11, 5.438474e-11,
      3.207564e-11, 1.889088e-11, 1.111038e-11, 6.525696e-12, 3.827944e-12, 2.242665e-12,
      1.312326e-12, 7.670354e-13, 4.478190e-13, 2.611677e-13, 1.521536e-13, 8.855353e-14,
      5.148791e-14, 2.990849e-14, 1.735751e-14, 1.006462e-14, 5.830912e-15, 3.375342e-15,
      1.952329e-15, 1.128375e-15, 6.516743e-16, 3.760927e-16, 2.168987e-16, 1.250049e-16,
      7.199700e-17, 4.144087e-17, 2.383854e-17, 1.370489e-17, 7.874537e-18, 4.522064e-18,
      2.595485e-18, 1.488944e-18, 8.537362e-19, 4.892853e-19, 2.802857e-19};
  for (std::uint64_t x = 0; x <= 100; ++x) {
    EXPECT_NEAR(fisher_exact({x, 1000, 10, 1000}), from_r[x], from_r[x] * 1e-5) << x;
  }
}

TEST(Fisher, MatchesExactTailSumOnRandomTables) {
  testing::Rng rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t npp = 1 + rng.below(200);
    std::uint64_t cells[4] = {0, 0, 0, 0};
    for (std::uint64_t i = 0; i < npp; ++i) ++cells[rng.below(4)];
    const ContingencyTable t{cells[0], cells[1], cells[2], cells[3]};
    const double want = testing::fisher_right_tail_exact(t.n11, t.n12, t.n21, t.n22);
    ASSERT_NEAR(fisher_exact(t), want, want * 1e-10)
        << t.n11 << ' ' << t.n12 << ' ' << t.n21 << ' ' << t.n22;
  }
}

TEST(Fisher, LogStaysFiniteWhereThePValueUnderflows) {
  const ContingencyTable t{5000, 0, 0, 5000};
  EXPECT_EQ(fisher_exact(t), 0.0);
  const double log_p = fisher_exact_log(t);
  EXPECT_TRUE(std::isfinite(log_p));
  // Only the observed table is in the tail: p = 1 / C(10000, 5000).
  const double want = std::lgamma(5001.0) * 2 - std::lgamma(10001.0);
  EXPECT_NEAR(log_p, want, 1e-9 * std::abs(want));
}

TEST(Fisher, TooSmallFactorialTableIsAnError) {
  const LogFactorials lf(10);
  EXPECT_THROW(fisher_exact_log(kBigCat, lf), Error);
}

TEST(StatisticsProperty, RangesAndTransposeInvariance) {
  testing::Rng rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t npp = 1 + rng.below(300);
    std::uint64_t cells[4] = {0, 0, 0, 0};
    for (std::uint64_t i = 0; i < npp; ++i) ++cells[rng.below(4)];
    const ContingencyTable t{cells[0], cells[1], cells[2], cells[3]};
    const ContingencyTable u = t.transposed();
    const double g = g_squared(t);
    const double x = x_squared(t);
    const double f = fisher_exact(t);
    ASSERT_GE(g, 0.0);
    ASSERT_GE(x, 0.0);
    ASSERT_GE(f, 0.0);
    ASSERT_LE(f, 1.0 + 1e-12);
    ASSERT_NEAR(g_squared(u), g, 1e-9 * (1 + g));
    ASSERT_NEAR(x_squared(u), x, 1e-9 * (1 + x));
    ASSERT_NEAR(fisher_exact(u), f, 1e-9 * f);
    if (const auto d = dice(t)) {
      ASSERT_GE(*d, 0.0);
      ASSERT_LE(*d, 1.0);
      ASSERT_EQ(*dice(u), *d);
      ASSERT_EQ(*d == 1.0, t.n11 == t.n1p() && t.n11 == t.np1());
    }
    const ExpectedTable m = expected(t);
    ASSERT_NEAR(m.m11 + m.m12, static_cast<double>(t.n1p()), 1e-9 * npp);
    ASSERT_NEAR(m.m21 + m.m22, static_cast<double>(t.n2p()), 1e-9 * npp);
    ASSERT_NEAR(m.m11 + m.m21, static_cast<double>(t.np1()), 1e-9 * npp);
    ASSERT_NEAR(m.m12 + m.m22, static_cast<double>(t.np2()), 1e-9 * npp);
  }
}

TEST(StatisticsProperty, ZeroExactlyWhenObservedEqualsExpected) {
  for (std::uint64_t a = 1; a <= 6; ++a) {
    for (std::uint64_t b = 1; b <= 6; ++b) {
      for (std::uint64_t k = 1; k <= 4; ++k) {
        // Rows (a, b) scaled by column weights (1, k): always independent.
        EXPECT_EQ(g_squared({a, a * k, b, b * k}), 0.0);
        EXPECT_EQ(x_squared({a, a * k, b, b * k}), 0.0);
        EXPECT_GT(g_squared({a + 1, a * k, b, b * k}), 0.0);
        EXPECT_GT(x_squared({a + 1, a * k, b, b * k}), 0.0);
      }
    }
  }
}

TEST(CountBigrams, NeverCrossesInstances) {
  const std::vector<Instance> corpus = {{"1", std::nullopt, {"a", "b"}},
                                        {"2", std::nullopt, {"c", "a", "b"}},
                                        {"3", std::nullopt, {"z"}},
                                        {"4", std::nullopt, {}}};
  const BigramCounts counts = count_bigrams(corpus);
  EXPECT_EQ(counts.total, 3u);
  EXPECT_EQ(counts.frequency({"a", "b"}), 2u);
  EXPECT_EQ(counts.frequency({"b", "c"}), 0u);
  EXPECT_EQ(counts.first_count("a"), 2u);
  EXPECT_EQ(counts.second_count("a"), 1u);
  EXPECT_EQ(counts.first_count("z"), 0u);
}

TEST(CountBigramsProperty, MatchesNaiveCountAndMarginalIdentities) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto corpus = testing::random_corpus(rng, 1 + rng.below(50), rng.below(30), 40);
    const BigramCounts counts = count_bigrams(corpus);
    EXPECT_NO_THROW(counts.validate());
    const auto naive = testing::count_pairs_naive(corpus);
    ASSERT_EQ(counts.pair_count.size(), naive.size());
    for (const auto& [bigram, n] : counts.pair_count) ASSERT_EQ(naive.at(bigram.label()), n);
  }
}

TEST(CountBigramsProperty, MergeOfShardsEqualsWholeCount) {
  testing::Rng rng(4);
  const auto corpus = testing::random_corpus(rng, 90, 12, 30);
  const std::span<const Instance> all(corpus);
  BigramCounts left = count_bigrams(all.first(40));
  BigramCounts right = count_bigrams(all.subspan(40));
  BigramCounts swapped = right;
  left.merge(right);
  swapped.merge(count_bigrams(all.first(40)));
  EXPECT_EQ(left, count_bigrams(all));
  EXPECT_EQ(swapped, left);
}

TEST(CountBigrams, ValidateCatchesBrokenCounts) {
  BigramCounts counts;
  counts.add("a", "b", 3);
  EXPECT_NO_THROW(counts.validate());
  counts.total = 4;
  EXPECT_THROW(counts.validate(), InvariantError);
}

BigramCounts counts_of(const std::vector<std::pair<Bigram, std::uint64_t>>& entries) {
  BigramCounts counts;
  for (const auto& [bigram, n] : entries) counts.add(bigram.first, bigram.second, n);
  return counts;
}

TEST(RankBigrams, FrequencyCutoffIsInclusive) {
  const BigramCounts counts = counts_of({{{"a", "b"}, 5}, {{"c", "d"}, 4}, {{"e", "f"}, 50}});
  const auto ranked = rank_bigrams(counts, Measure::G2, 5, 100);
  ASSERT_EQ(ranked.size(), 2u);
  for (const auto& entry : ranked) EXPECT_GE(entry.frequency, 5u);
  EXPECT_TRUE(rank_bigrams(counts, Measure::G2, 51, 100).empty());
}

TEST(RankBigrams, TopKKeepsTiesAtTheCut) {
  // Four disjoint pairs with identical tables tie on every measure.
  const BigramCounts counts = counts_of({{{"a", "b"}, 6},
                                         {{"c", "d"}, 6},
                                         {{"e", "f"}, 6},
                                         {{"g", "h"}, 6},
                                         {{"x", "y"}, 30},
                                         {{"p", "q"}, 1}});
  const auto ranked = rank_bigrams(counts, Measure::Dice, 2, 2);
  ASSERT_EQ(ranked.size(), 5u);
  EXPECT_EQ(ranked[0].bigram, (Bigram{"x", "y"}));
  EXPECT_EQ(ranked[1].bigram, (Bigram{"a", "b"}));
  EXPECT_EQ(ranked[4].bigram, (Bigram{"g", "h"}));
}

TEST(RankBigrams, TiesBreakByFrequencyThenWords) {
  // Dice is 1 for all three; the frequent pair wins, then lexicographic order.
  const BigramCounts counts = counts_of({{{"b", "a"}, 6}, {{"a", "z"}, 6}, {{"m", "m"}, 9}});
  const auto ranked = rank_bigrams(counts, Measure::Dice, 1, 10);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].bigram, (Bigram{"m", "m"}));
  EXPECT_EQ(ranked[1].bigram, (Bigram{"a", "z"}));
  EXPECT_EQ(ranked[2].bigram, (Bigram{"b", "a"}));
}

TEST(RankBigrams, FisherRanksByLogP) {
  const BigramCounts counts = counts_of({{{"a", "b"}, 400}, {{"a", "c"}, 10}, {{"d", "b"}, 10},
                                         {{"c", "d"}, 300}, {{"c", "e"}, 10}, {{"f", "g"}, 600}});
  const auto ranked = rank_bigrams(counts, Measure::Fisher, 1, 100);
  for (const auto& entry : ranked) {
    EXPECT_GE(entry.score, 0.0);
    EXPECT_LE(entry.score, 1.0);
  }
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1].sort_key, ranked[i].sort_key);
  }
  // The strongest pairs underflow to p = 0 but stay distinct by -ln p.
  EXPECT_GT(ranked[0].sort_key, ranked[1].sort_key);
}

TEST(RankBigrams, RejectsZeroParameters) {
  const BigramCounts counts = counts_of({{{"a", "b"}, 5}});
  EXPECT_THROW(rank_bigrams(counts, Measure::G2, 0, 10), Error);
  EXPECT_THROW(rank_bigrams(counts, Measure::G2, 1, 0), Error);
}

TEST(RankBigrams, DeterministicOutput) {
  testing::Rng first_rng(8);
  testing::Rng second_rng(8);
  const BigramCounts first = count_bigrams(testing::random_corpus(first_rng, 300, 25, 60));
  const BigramCounts second = count_bigrams(testing::random_corpus(second_rng, 300, 25, 60));
  for (const Measure m : {Measure::G2, Measure::X2, Measure::Fisher, Measure::Dice, Measure::Pmi}) {
    EXPECT_EQ(format_ranked(rank_bigrams(first, m, 2, 100)),
              format_ranked(rank_bigrams(second, m, 2, 100)))
        << measure_tag(m);
  }
}

TEST(MeasureTags, RoundTrip) {
  for (const Measure m : {Measure::G2, Measure::X2, Measure::Fisher, Measure::Dice, Measure::Pmi}) {
    EXPECT_EQ(parse_measure(measure_tag(m)), m);
  }
  EXPECT_THROW(parse_measure("chi"), Error);
}

TEST(AgreementCheck, WellPopulatedTablesAgree) {
  const BigramCounts counts = count_bigrams(testing::agreement_corpus());
  const AgreementReport report = agreement_check(counts, 6, 100);
  EXPECT_TRUE(report.agree);
  EXPECT_TRUE(report.divergent_bigrams.empty());
  EXPECT_EQ(report.canonical_measure, Measure::G2);
  EXPECT_GE(report.canonical.size(), 100u);
  EXPECT_EQ(report.canonical, rank_bigrams(counts, Measure::G2, 6, 100));
}

TEST(AgreementCheck, EmptyCandidateSetAgreesVacuously) {
  const BigramCounts counts = counts_of({{{"a", "b"}, 1}, {{"c", "d"}, 1}, {{"e", "f"}, 1}});
  const AgreementReport report = agreement_check(counts, 2, 100);
  EXPECT_TRUE(report.agree);
  EXPECT_TRUE(report.canonical.empty());
}

TEST(AgreementCheck, SkewedTableFallsBackToFisher) {
  const BigramCounts counts = count_bigrams(testing::skewed_corpus());
  ASSERT_EQ(contingency({"rare", "pair"}, counts), (ContingencyTable{6, 0, 0, 994}));
  ASSERT_EQ(contingency({"common", "pair2"}, counts), (ContingencyTable{50, 50, 50, 850}));

  const auto by_g2 = rank_bigrams(counts, Measure::G2, 6, 100);
  const auto by_x2 = rank_bigrams(counts, Measure::X2, 6, 100);
  ASSERT_EQ(by_g2.size(), 2u);
  EXPECT_EQ(by_g2[0].bigram, (Bigram{"common", "pair2"}));
  EXPECT_EQ(by_x2[0].bigram, (Bigram{"rare", "pair"}));

  const AgreementReport report = agreement_check(counts, 6, 100);
  EXPECT_FALSE(report.agree);
  EXPECT_EQ(report.divergent_bigrams,
            (std::vector<Bigram>{{"common", "pair2"}, {"rare", "pair"}}));
  EXPECT_EQ(report.canonical_measure, Measure::Fisher);
  EXPECT_EQ(report.canonical, rank_bigrams(counts, Measure::Fisher, 6, 100));
}

}  // namespace
}  // namespace bigram_wsd
