#include "colombeau/error.hpp"

namespace colombeau {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::FieldMismatch: return "field_mismatch";
    case ErrorKind::NotAUnit: return "not_a_unit";
    case ErrorKind::ComplexOrderUndefined: return "complex_order_undefined";
    case ErrorKind::IndeterminateSign: return "indeterminate_sign";
    case ErrorKind::NotQPositive: return "not_q_positive";
    case ErrorKind::IrrationalLeadingCoefficient: return "irrational_leading_coefficient";
    case ErrorKind::NotIdempotent: return "not_idempotent";
    case ErrorKind::NonRealIdempotent: return "non_real_idempotent";
    case ErrorKind::Indeterminate: return "indeterminate";
    case ErrorKind::InexactGenerator: return "inexact_generator";
    case ErrorKind::InexactElement: return "inexact_element";
    case ErrorKind::InexactInput: return "inexact_input";
    case ErrorKind::InexactCoefficient: return "inexact_coefficient";
    case ErrorKind::ContainmentViolation: return "containment_violation";
    case ErrorKind::OutOfDomain: return "out_of_domain";
    case ErrorKind::DegreeTooHigh: return "degree_too_high";
    case ErrorKind::ArityMismatch: return "arity_mismatch";
    case ErrorKind::PreconditionFailed: return "precondition_failed";
    case ErrorKind::SyntaxError: return "syntax_error";
  }
  return "unknown";
}

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected) {
  std::string out = "syntax error at offset " + std::to_string(offset) + ": expected ";
  if (expected.size() > 1) out += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : Error(ErrorKind::SyntaxError, describe(offset, expected)), offset_(offset), expected_(std::move(expected)) {}

}  // namespace colombeau
