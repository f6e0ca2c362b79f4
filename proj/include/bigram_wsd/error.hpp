#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bigram_wsd {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input record; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two records in one dataset share an id.
class DuplicateIdError : public Error {
 public:
  DuplicateIdError(const std::string& id, std::size_t first_line, std::size_t line)
      : Error("duplicate id \"" + id + "\" on lines " + std::to_string(first_line) + " and " +
              std::to_string(line)),
        id_(id) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// A data-structure invariant was violated (e.g. a negative contingency cell).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace bigram_wsd
