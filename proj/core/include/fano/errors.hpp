#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fano {

enum class ErrorCode {
  DivisionByZero,
  DegreeOverflow,
  DegreeMismatch,
  ContextMismatch,
  DependentBasis,
  ChartDegenerate,
  NotPoisson,
  InconsistentCheck,
  NotOnConic,
  DisjointnessFailure,
  ComplexFailure,
  TangencyFailure,
  IndependenceFailure,
  InvalidInput,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// command line front end can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fano
