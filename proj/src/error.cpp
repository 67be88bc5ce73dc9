#include "imx/error.hpp"

namespace imx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoApplicableTheorem: return "NoApplicableTheorem";
    case ErrorCode::NoApplicableCase: return "NoApplicableCase";
    case ErrorCode::RankTooHigh: return "RankTooHigh";
    case ErrorCode::CrossDependency: return "CrossDependency";
    case ErrorCode::OutOfBox: return "OutOfBox";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::CycleLimit: return "CycleLimit";
    case ErrorCode::PivotContainsZero: return "PivotContainsZero";
    case ErrorCode::SingularInside: return "SingularInside";
    case ErrorCode::SingularVertex: return "SingularVertex";
    case ErrorCode::EmptySolutionSet: return "EmptySolutionSet";
    case ErrorCode::UnboundedSolutionSet: return "UnboundedSolutionSet";
    case ErrorCode::EigenvectorSignAmbiguity: return "EigenvectorSignAmbiguity";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return 2;
    case ErrorCode::InvalidArgument:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::NoApplicableTheorem:
    case ErrorCode::NoApplicableCase:
    case ErrorCode::RankTooHigh:
    case ErrorCode::CrossDependency:
    case ErrorCode::OutOfBox:
      return 1;
    case ErrorCode::CapExceeded:
      return 4;
    default:
      return 3;
  }
}

}  // namespace imx
