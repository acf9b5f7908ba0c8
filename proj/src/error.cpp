#include "thick/error.hpp"

namespace thick {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotPtmRing: return "NotPtmRing";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::BadCenter: return "BadCenter";
    case ErrorCode::NotPtm: return "NotPtm";
    case ErrorCode::NonMonomialDivisor: return "NonMonomialDivisor";
    case ErrorCode::NotBoundaryVariable: return "NotBoundaryVariable";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NonMonomialInput: return "NonMonomialInput";
    case ErrorCode::FuelExhausted: return "FuelExhausted";
    case ErrorCode::OracleFailure: return "OracleFailure";
    case ErrorCode::NotNowhereDense: return "NotNowhereDense";
    case ErrorCode::ReductionNotMonomial: return "ReductionNotMonomial";
    case ErrorCode::NotTrivialReduction: return "NotTrivialReduction";
    case ErrorCode::NotBoundaryMonomial: return "NotBoundaryMonomial";
    case ErrorCode::SplitMismatch: return "SplitMismatch";
    case ErrorCode::NonMonomialDenominator: return "NonMonomialDenominator";
    case ErrorCode::InvariantNotDropping: return "InvariantNotDropping";
    case ErrorCode::NotGenericallySmooth: return "NotGenericallySmooth";
    case ErrorCode::MissingPi: return "MissingPi";
    case ErrorCode::RetractNotRegular: return "RetractNotRegular";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace thick
