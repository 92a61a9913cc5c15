#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetlie {

enum class ErrorCode {
  DivisionByZero,
  UnsupportedRadical,
  NotPolynomialInSplitVars,
  SingularPoint,
  IrrationalValue,
  DuplicateName,
  OrderExceeded,
  MultiplierNotProlongable,
  SpaceMismatch,
  UnknownGeneratorName,
  SingularJacobian,
  MissingDerivativeMap,
  LeadingDerivativeRemains,
  InconsistentSolvedForm,
  DegeneratePoint,
  RankDisagreement,
  UnknownKey,
  BadParams,
  SyntaxError,
  UnknownSymbol,
  ArityError,
  InvalidArgument,
  InternalError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jetlie
