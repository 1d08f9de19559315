#include "rankforge/error.hpp"

namespace rankforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::DenominatorNotInvertible: return "DenominatorNotInvertible";
    case ErrorCode::RepeatedRoot: return "RepeatedRoot";
    case ErrorCode::ZeroRoot: return "ZeroRoot";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
    case ErrorCode::InternalIdentityFailure: return "InternalIdentityFailure";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rankforge
