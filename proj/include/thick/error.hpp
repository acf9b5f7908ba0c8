#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thick {

enum class ErrorCode {
  ParseError,
  UnknownVariable,
  NotPtmRing,
  ZeroInput,
  BadCenter,
  NotPtm,
  NonMonomialDivisor,
  NotBoundaryVariable,
  NotAdmissible,
  NonMonomialInput,
  FuelExhausted,
  OracleFailure,
  NotNowhereDense,
  ReductionNotMonomial,
  NotTrivialReduction,
  NotBoundaryMonomial,
  SplitMismatch,
  NonMonomialDenominator,
  InvariantNotDropping,
  NotGenericallySmooth,
  MissingPi,
  RetractNotRegular,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this exception; `code()` is the
/// machine-readable part, `what()` carries a human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thick
