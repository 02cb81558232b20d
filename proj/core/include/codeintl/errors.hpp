#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codeintl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed source: unterminated literal or comment, or invalid UTF-8.
/// `span` is the offending source text (truncated for long spans).
class LexError : public Error {
 public:
  LexError(const std::string& message, int line, int col, std::string span)
      : Error(message + " at " + std::to_string(line) + ":" +
              std::to_string(col)),
        line_(line),
        col_(col),
        span_(std::move(span)) {}

  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& span() const { return span_; }

 private:
  int line_;
  int col_;
  std::string span_;
};

/// A translated segment holds characters that cannot appear in an
/// identifier of the target programming language.
class InvalidSegment : public Error {
 public:
  using Error::Error;
};

/// The translation service could not be reached or refused the request.
class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

class UnsupportedScript : public Error {
 public:
  using Error::Error;
};

/// A target identifier has no entry in the translation map.
class MissingEntry : public Error {
 public:
  using Error::Error;
};

/// Bad files, flags or configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace codeintl
