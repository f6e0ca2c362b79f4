#include "bigram_wsd/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "bigram_wsd/error.hpp"
#include "unicode.hpp"

namespace bigram_wsd {

using nlohmann::json;

PartOfSpeech parse_pos(std::string_view tag) {
  if (tag == "n") return PartOfSpeech::Noun;
  if (tag == "v") return PartOfSpeech::Verb;
  if (tag == "a") return PartOfSpeech::Adjective;
  if (tag == "p") return PartOfSpeech::Unspecified;
  throw Error("unknown part of speech \"" + std::string(tag) + "\" (expected n, v, a or p)");
}

char pos_tag(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun: return 'n';
    case PartOfSpeech::Verb: return 'v';
    case PartOfSpeech::Adjective: return 'a';
    case PartOfSpeech::Unspecified: return 'p';
  }
  return 'p';
}

std::string Task::name() const { return word + "-" + pos_tag(pos); }

bool is_deleted_punctuation(char32_t c) noexcept {
  return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
         (c >= 0x7B && c <= 0x7E);
}

std::vector<std::string> normalize_text(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    const char32_t cp = unicode::decode_next(raw, pos);
    if (unicode::is_whitespace(cp)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else if (!is_deleted_punctuation(cp)) {
      unicode::append_utf8(current, unicode::to_lower(cp));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& token : tokens) {
    if (!text.empty()) text.push_back(' ');
    text += token;
  }
  return text;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

Instance parse_record(const std::string& line, std::size_t line_no) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw ParseError(line_no, "record is not a JSON object");

  Instance instance;
  const auto id = record.find("id");
  if (id == record.end() || !id->is_string()) {
    throw ParseError(line_no, "missing or non-string \"id\" field");
  }
  instance.id = id->get<std::string>();

  const auto text = record.find("text");
  if (text == record.end() || !text->is_string()) {
    throw ParseError(line_no, "missing or non-string \"text\" field");
  }
  instance.tokens = normalize_text(text->get<std::string>());

  if (const auto sense = record.find("sense"); sense != record.end() && !sense->is_null()) {
    if (!sense->is_string()) throw ParseError(line_no, "\"sense\" must be a string or null");
    instance.sense = sense->get<std::string>();
  }
  return instance;
}

}  // namespace

std::vector<Instance> load_dataset(std::istream& in) {
  std::vector<Instance> instances;
  std::unordered_map<std::string, std::size_t> seen;  // id -> line
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    Instance instance = parse_record(line, line_no);
    const auto [it, inserted] = seen.emplace(instance.id, line_no);
    if (!inserted) throw DuplicateIdError(instance.id, it->second, line_no);
    instances.push_back(std::move(instance));
  }
  if (in.bad()) throw Error("read failure after line " + std::to_string(line_no));
  return instances;
}

std::vector<Instance> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return load_dataset(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + std::string(e.what()));
  } catch (const DuplicateIdError& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_dataset(std::ostream& out, const std::vector<Instance>& instances) {
  for (const auto& instance : instances) {
    json record;
    record["id"] = instance.id;
    record["sense"] = instance.sense ? json(*instance.sense) : json(nullptr);
    record["text"] = join_tokens(instance.tokens);
    out << record.dump() << '\n';
  }
}

namespace {

Task assemble_task(std::string word, std::string_view pos, std::vector<Instance> train,
                   std::vector<Instance> test) {
  Task task;
  task.word = std::move(word);
  task.pos = parse_pos(pos);
  task.train = std::move(train);
  task.test = std::move(test);
  if (task.train.empty()) throw Error(task.name() + ": training set is empty");
  for (const auto& instance : task.train) {
    if (!instance.sense || instance.sense->empty()) {
      throw Error(task.name() + ": training instance \"" + instance.id + "\" has no sense tag");
    }
    task.sense_inventory.insert(*instance.sense);
  }
  return task;
}

}  // namespace

Task load_task(std::string word, std::string_view pos, std::istream& train_source,
               std::istream& test_source) {
  return assemble_task(std::move(word), pos, load_dataset(train_source), load_dataset(test_source));
}

Task load_task(std::string word, std::string_view pos, const std::filesystem::path& train_path,
               const std::filesystem::path& test_path) {
  return assemble_task(std::move(word), pos, load_dataset(train_path), load_dataset(test_path));
}

}  // namespace bigram_wsd
