#pragma once

// Data-parallel kernels (OpenMP) and the serial reference versions they are
// tested against. The public API in stats.hpp / features.hpp dispatches to
// the parallel kernels; bench/ compares the two.

#include <span>
#include <vector>

#include "bigram_wsd/corpus.hpp"
#include "bigram_wsd/features.hpp"
#include "bigram_wsd/stats.hpp"

namespace bigram_wsd {

/// Candidate bigrams with frequency >= min_freq, sorted by (first, second).
std::vector<const Bigram*> candidate_bigrams(const BigramCounts& counts, std::uint64_t min_freq);

namespace kernels {

/// Per-thread partial counts over instance shards, merged at the end.
BigramCounts count_bigrams(std::span<const Instance> instances);

/// Scores every candidate; output is in candidate order, undefined scores dropped.
std::vector<ScoredBigram> score_candidates(const BigramCounts& counts,
                                           std::span<const Bigram* const> candidates,
                                           Measure measure);

std::vector<FeatureVector> vectorize_all(std::span<const Instance> instances,
                                         const FeatureSet& features);

}  // namespace kernels

namespace reference {

BigramCounts count_bigrams(std::span<const Instance> instances);

std::vector<ScoredBigram> score_candidates(const BigramCounts& counts,
                                           std::span<const Bigram* const> candidates,
                                           Measure measure);

std::vector<FeatureVector> vectorize_all(std::span<const Instance> instances,
                                         const FeatureSet& features);

}  // namespace reference

}  // namespace bigram_wsd
