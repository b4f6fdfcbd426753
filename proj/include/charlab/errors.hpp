#pragma once

#include <stdexcept>
#include <string>

namespace charlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (DSL expressions, cyclotomic renderings, files).
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line), column(column) {}
  explicit ParseError(const std::string& msg) : Error(msg), line(0), column(0) {}
  int line;
  int column;
};

/// A stated precondition of an operation or theorem does not hold.
class HypothesisError : public Error {
public:
  explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

/// A verified identity failed.  The underlying statements are proved, so a
/// failure here means an engine bug (or a deliberately broken input).
class CheckFailure : public Error {
public:
  explicit CheckFailure(const std::string& msg) : Error(msg) {}
};

} // namespace charlab
