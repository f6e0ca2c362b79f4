#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace bigram_wsd {

/// One sense-tagged occurrence of an ambiguous word with its surrounding context.
struct Instance {
  std::string id;
  std::optional<std::string> sense;  // absent for unlabeled prediction input
  std::vector<std::string> tokens;   // normalized

  bool operator==(const Instance&) const = default;
};

enum class PartOfSpeech { Noun, Verb, Adjective, Unspecified };

/// Parses the one-letter tags n, v, a, p. Throws Error otherwise.
PartOfSpeech parse_pos(std::string_view tag);
char pos_tag(PartOfSpeech pos);

/// A disambiguation task: one word/part-of-speech with its train and test data.
struct Task {
  std::string word;
  PartOfSpeech pos = PartOfSpeech::Unspecified;
  std::vector<Instance> train;
  std::vector<Instance> test;
  std::set<std::string> sense_inventory;  // distinct train senses

  /// "word-pos", e.g. "accident-n".
  std::string name() const;
};

/// Lowercases, deletes ASCII punctuation, and splits on Unicode whitespace.
/// The deletion table is documented in docs/normalization.md.
std::vector<std::string> normalize_text(std::string_view raw);

/// True for the 32 ASCII punctuation characters that normalize_text deletes.
bool is_deleted_punctuation(char32_t c) noexcept;

/// Reads JSON-lines records {"id", "sense", "text"}. Blank lines are skipped.
/// Throws ParseError on malformed records and DuplicateIdError on repeated ids.
std::vector<Instance> load_dataset(std::istream& in);
std::vector<Instance> load_dataset(const std::filesystem::path& path);

/// Writes instances back as JSON-lines; text is the space-joined token list.
void write_dataset(std::ostream& out, const std::vector<Instance>& instances);

/// Assembles a Task. Every train instance must carry a non-empty sense.
Task load_task(std::string word, std::string_view pos, std::istream& train_source,
               std::istream& test_source);
Task load_task(std::string word, std::string_view pos, const std::filesystem::path& train_path,
               const std::filesystem::path& test_path);

}  // namespace bigram_wsd
