#include "pmcf/errors.hpp"

namespace pmcf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::LiftingObstruction: return "LiftingObstruction";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::AmbiguousSelection: return "AmbiguousSelection";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ReducibleMinpoly: return "ReducibleMinpoly";
    case ErrorKind::ZeroDenominatorConvergent: return "ZeroDenominatorConvergent";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::ZeroIntermediate: return "ZeroIntermediate";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::DigitMapViolation: return "DigitMapViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pmcf
