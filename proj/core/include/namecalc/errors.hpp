#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace namecalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Byte offsets into the parsed text, half-open.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool covers(std::size_t pos) const { return start <= pos && pos <= end; }
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(message + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
        message_(message),
        span_(span) {}

  const std::string& message() const { return message_; }
  SourceSpan span() const { return span_; }

 private:
  std::string message_;
  SourceSpan span_;
};

/// A cost or size guard refused the request. `guard()` names the guard.
class GuardError : public Error {
 public:
  GuardError(std::string guard, const std::string& detail)
      : Error("guard '" + guard + "' exceeded: " + detail), guard_(std::move(guard)) {}

  const std::string& guard() const { return guard_; }

 private:
  std::string guard_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace namecalc
