#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfgowl {

enum class Severity { Warning, Error };

// A non-fatal finding attached to an input. line/column are 1-based;
// 0 means "not tied to a source location".
struct Diagnostic {
  Severity severity = Severity::Warning;
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;

  bool operator==(const Diagnostic&) const = default;
};

std::string to_string(const Diagnostic& d);

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed grammar or sequence input. Carries a source position when known.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line_;
  std::size_t column_;
};

// A sequence handed to the tree builder is not in the grammar's language.
class NotInLanguageError : public Error {
 public:
  NotInLanguageError(const std::string& what, std::size_t recognized_prefix)
      : Error(what), recognized_prefix_(recognized_prefix) {}

  // Number of leading tokens that were consumed before recognition failed.
  std::size_t recognized_prefix() const { return recognized_prefix_; }

 private:
  std::size_t recognized_prefix_;
};

// An axiom outside the fragment the fixpoint engine understands.
class UnsupportedAxiomError : public Error {
 public:
  explicit UnsupportedAxiomError(const std::string& axiom_key)
      : Error("unsupported axiom shape: " + axiom_key) {}
};

}  // namespace cfgowl
