#pragma once

#include <stdexcept>
#include <string>

namespace spinorfact {

enum class ErrorKind {
  FieldMismatch,
  NonUnitNormal,
  IdealPoint,
  OddElement,
  NotInvertible,
  InexactField,
  NotUnitBivector,
  NotSpinor,
  ZeroDivisor,
  DegenerateRemainder,
  NotRightZero,
  NormNotSquare,
  InconsistentLinearSystem,
  NotOnSphere,
  WitnessNotReal,
  OutOfRange,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spinorfact
