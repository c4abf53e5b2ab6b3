#include "hitgen/core/error.hpp"

#include <sstream>

namespace hitgen {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax: return "SyntaxError";
    case ErrorCode::scope: return "ScopeError";
    case ErrorCode::classify: return "ClassifyError";
    case ErrorCode::type: return "TypeError";
    case ErrorCode::unbound_variable: return "UnboundVariable";
    case ErrorCode::duplicate_name: return "DuplicateName";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::pattern_restriction: return "PatternRestrictionError";
    case ErrorCode::fuel_exhausted: return "FuelExhausted";
    case ErrorCode::positivity: return "PositivityError";
    case ErrorCode::endpoint: return "EndpointError";
    case ErrorCode::io: return "IOError";
    case ErrorCode::internal: return "InternalError";
  }
  return "Error";
}

namespace {

std::string render(ErrorCode code, const std::string& message, const SourceSpan& span) {
  std::ostringstream out;
  if (span.known()) {
    if (!span.file.empty()) out << span.file << ':';
    out << span.line << ':' << span.col_start << ": ";
  }
  out << error_code_name(code) << ": " << message;
  return out.str();
}

}  // namespace

Error::Error(ErrorCode code, std::string message, SourceSpan span)
    : std::runtime_error(render(code, message, span)),
      code_(code),
      message_(std::move(message)),
      span_(std::move(span)) {}

Error Error::with_span(const SourceSpan& span) const {
  if (span_.known() || !span.known()) return *this;
  return Error(code_, message_, span);
}

void internal_error(const std::string& message) {
  throw Error(ErrorCode::internal, message);
}

}  // namespace hitgen
