#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colombeau {

enum class ErrorKind {
  InvalidArgument,
  FieldMismatch,
  NotAUnit,
  ComplexOrderUndefined,
  IndeterminateSign,
  NotQPositive,
  IrrationalLeadingCoefficient,
  NotIdempotent,
  NonRealIdempotent,
  Indeterminate,
  InexactGenerator,
  InexactElement,
  InexactInput,
  InexactCoefficient,
  ContainmentViolation,
  OutOfDomain,
  DegreeTooHigh,
  ArityMismatch,
  PreconditionFailed,
  SyntaxError,
};

// snake_case name used in JSON error reports.
std::string_view kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error at a byte offset of the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  /// The same error reported at offset + shift.
  ParseError shifted(std::size_t shift) const { return ParseError(offset_ + shift, expected_); }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace colombeau
