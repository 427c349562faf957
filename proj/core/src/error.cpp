#include "fractel/error.hpp"

namespace fractel {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainEscape: return "DomainEscape";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::MapMismatch: return "MapMismatch";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::ZeroWitness: return "ZeroWitness";
    case ErrorKind::NotContractive: return "NotContractive";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::ContractionViolation: return "ContractionViolation";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::EigOne: return "EigOne";
    case ErrorKind::BadDigit: return "BadDigit";
    case ErrorKind::BadRational: return "BadRational";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSerializable: return "NotSerializable";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace fractel
