#include "sunada/error.hpp"

namespace sunada {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::ConductorOverflow: return "ConductorOverflow";
    case ErrorKind::EllTooSmall: return "EllTooSmall";
    case ErrorKind::EllDividesOrder: return "EllDividesOrder";
    case ErrorKind::MalformedCharacter: return "MalformedCharacter";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::DimensionOverflow: return "DimensionOverflow";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DisconnectedCover: return "DisconnectedCover";
    case ErrorKind::NotAWitness: return "NotAWitness";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void check(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::Internal, "identity violated: " + what);
}

}  // namespace sunada
