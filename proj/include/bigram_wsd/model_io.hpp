#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "bigram_wsd/features.hpp"
#include "bigram_wsd/learners.hpp"

namespace bigram_wsd {

/// A trained classifier together with the feature set it was trained on, so
/// raw instances can be vectorized at prediction time.
struct ModelFile {
  FeatureSet features;
  Model model;

  bool operator==(const ModelFile&) const = default;
};

/// JSON form, documented in docs/formats.md.
std::string to_json(const ModelFile& file);
/// Throws Error on malformed or inconsistent input.
ModelFile model_from_json(const std::string& text);

void save_model(const std::filesystem::path& path, const ModelFile& file);
ModelFile load_model(const std::filesystem::path& path);

}  // namespace bigram_wsd
