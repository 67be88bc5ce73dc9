#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace imx {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  // precondition family (cli exit 1)
  PreconditionViolated,
  NoApplicableTheorem,
  NoApplicableCase,
  RankTooHigh,
  CrossDependency,
  OutOfBox,
  // numeric family (cli exit 3)
  SingularMatrix,
  NotSymmetric,
  NonConvergence,
  CycleLimit,
  PivotContainsZero,
  SingularInside,
  SingularVertex,
  EmptySolutionSet,
  UnboundedSolutionSet,
  EigenvectorSignAmbiguity,
  // cli exit 4
  CapExceeded,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Process exit code for an error raised out of the command-line front end.
int exit_code_for(ErrorCode code);

}  // namespace imx
