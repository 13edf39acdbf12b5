#pragma once

#include <stdexcept>
#include <string>

namespace sunada {

enum class ErrorKind {
  CapExceeded,
  DegreeMismatch,
  NotSubgroup,
  GroupMismatch,
  ConductorOverflow,
  EllTooSmall,
  EllDividesOrder,
  MalformedCharacter,
  TooLarge,
  FieldMismatch,
  NotDivisible,
  NotCyclic,
  DimensionOverflow,
  ConvergenceFailure,
  DisconnectedCover,
  NotAWitness,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Error raised by every library operation; `kind()` identifies the contract
/// that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Internal consistency check for identities that must hold mathematically.
// Failing one is a bug (or a false theorem), never an input problem.
void check(bool condition, const std::string& what);

}  // namespace sunada
