#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hitgen {

/// Location of a parsed node. Columns are 1-based; a zero line means "unknown".
struct SourceSpan {
  std::string file;
  int line = 0;
  int col_start = 0;
  int col_end = 0;

  bool known() const { return line > 0; }
};

enum class ErrorCode {
  syntax,
  scope,
  classify,
  type,
  unbound_variable,
  duplicate_name,
  unknown_name,
  arity_mismatch,
  pattern_restriction,
  fuel_exhausted,
  positivity,
  endpoint,
  io,
  internal,
};

/// Stable diagnostic name, e.g. "PositivityError".
std::string_view error_code_name(ErrorCode code);

/// Every user-facing failure of the pipeline. The code identifies the
/// diagnostic class; the span is attached whenever the failing node has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, SourceSpan span = {});

  ErrorCode code() const { return code_; }
  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }

  /// Returns a copy with the span filled in if this error has none yet.
  Error with_span(const SourceSpan& span) const;

 private:
  ErrorCode code_;
  std::string message_;
  SourceSpan span_;
};

/// Invariant breach inside the library itself (never caused by user input).
[[noreturn]] void internal_error(const std::string& message);

}  // namespace hitgen
