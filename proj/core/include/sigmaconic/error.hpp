#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmaconic {

enum class ErrorCode {
  NonPrime,
  GcdViolation,
  NoIrreducible,
  FieldTooLarge,
  BadElement,
  DivisionByZero,
  NotInSubfield,
  ZeroArgument,
  ZeroVector,
  CoincidentPoints,
  NotCollinear,
  WrongCardinality,
  DimensionMismatch,
  SingularMatrix,
  CoincidentVertices,
  DegenerateInput,
  MissingOne,
  ZeroLeadingCoefficient,
  BadDegreeParity,
  HypothesisViolation,
  TooSmall,
  BadParams,
  TooLargeForExhaustive,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sigmaconic
