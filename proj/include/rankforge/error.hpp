#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankforge {

enum class ErrorCode {
  CompositeCharacteristic,
  EvenCharacteristic,
  ReducibleModulus,
  FieldMismatch,
  DomainMismatch,
  DivisionByZero,
  NonMonicDivisor,
  ZeroPolynomial,
  ZeroLeadingCoefficient,
  DenominatorNotInvertible,
  RepeatedRoot,
  ZeroRoot,
  ZeroAlpha,
  InternalIdentityFailure,
  BadPrime,
  NotIrreducible,
  UnsupportedDegree,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the Python module) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rankforge
