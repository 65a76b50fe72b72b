#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fekete {

enum class ErrorCode {
  DivisionByNonUnit,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  InnerConstantNonzero,
  NotInvertible,
  NegativeIndex,
  ParameterOutOfRange,
  NotNormalized,
  PowerBranchFailure,
  FitUnstable,
  NotSchwarz,
  SolveSingular,
  WitnessUndefined,
  ZeroConvolutionCoefficient,
  BadParameter,
  OrderMismatch,
  EmptySweep,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; the
// code identifies which precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fekete
