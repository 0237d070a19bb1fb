#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusq {

enum class ErrorKind {
  InvalidInput,
  InvalidAutomorphism,
  GroupTooLarge,
  InvalidGenerator,
  InvalidPrime,
  InvalidPair,
  InvalidCharacter,
  TableFailure,
  InconsistentCharacter,
  NotAHomomorphism,
  InvalidForm,
  InvalidLattice,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace torusq
