#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace copermanent {

enum class ErrorKind {
  // graph6 decoding
  InvalidByte,
  TruncatedPayload,
  NonzeroPadding,
  TrailingBytes,
  InvalidAdjacency,
  // capacity
  OrderTooLarge,
  CoefficientOverflow,
  DegreeOverflow,
  EvaluationOverflow,
  Overflow,
  // survey and file formats
  OrderMismatch,
  DuplicateGraph,
  MalformedRecord,
};

/// Data errors come from bad input; capacity errors from size or overflow
/// bounds. The CLI maps them to distinct exit codes.
enum class ErrorCategory { Data, Capacity };

constexpr ErrorCategory category_of(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderTooLarge:
    case ErrorKind::CoefficientOverflow:
    case ErrorKind::DegreeOverflow:
    case ErrorKind::EvaluationOverflow:
    case ErrorKind::Overflow:
      return ErrorCategory::Capacity;
    default:
      return ErrorCategory::Data;
  }
}

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }

 private:
  ErrorKind kind_;
};

/// An error tied to a line of a line-oriented input (graph6 stream,
/// checkpoint file). Line numbers are 1-based.
class LineError : public Error {
 public:
  LineError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace copermanent
