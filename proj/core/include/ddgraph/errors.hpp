#pragma once

#include <stdexcept>
#include <string>

namespace ddgraph {

enum class ErrorKind {
  // field construction and arithmetic
  NotPrimePower,
  DivisionByZero,
  OutOfRange,
  // designs
  TooLarge,
  NotHadamard,
  NotNormalized,
  AxiomViolation,
  ParameterMismatch,
  IndexOutOfRange,
  // squares
  NotSquare,
  EntryOutOfRange,
  // constructions
  DimensionMismatch,
  BadBijection,
  DiagonalViolation,
  // graph verification
  NotRegular,
  NotDivisible,
  Degenerate,
  NoPartition,
  NotSrg,
  Disconnected,
  NotDistanceRegular,
  // algebra
  Infeasible,
  NotPrime,
  WrongParameters,
  NotGraphical,
  NotRegularRows,
  // misc
  UnknownName,
  BadInput,
};

const char* to_string(ErrorKind k);

// Every failure the library reports carries a machine-checkable kind plus a
// human-readable message with a witness where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ddgraph
