#include "fekete/errors.hpp"

namespace fekete {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::InnerConstantNonzero: return "InnerConstantNonzero";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::PowerBranchFailure: return "PowerBranchFailure";
    case ErrorCode::FitUnstable: return "FitUnstable";
    case ErrorCode::NotSchwarz: return "NotSchwarz";
    case ErrorCode::SolveSingular: return "SolveSingular";
    case ErrorCode::WitnessUndefined: return "WitnessUndefined";
    case ErrorCode::ZeroConvolutionCoefficient: return "ZeroConvolutionCoefficient";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::EmptySweep: return "EmptySweep";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fekete
