#pragma once

#include <stdexcept>
#include <string>

namespace ncm {

enum class ErrorKind {
  AssociativityViolation,
  UnitViolation,
  PossiblyInfiniteDimensional,
  ParentMismatch,
  NonBasicTop,
  NotIdempotent,
  ZeroIdempotent,
  NotAnIdeal,
  NotMonomorphism,
  QuotientNotSemisimple,
  ActionsDoNotCommute,
  NotAModule,
  CapExceeded,
  EmptyComposition,
  InvalidCurve,
  CurveMismatch,
  ChainMismatch,
  DivisorViolation,
  PointNotSpecial,
  TiltingObstruction,
  InvalidWeights,
  RepeatedLambda,
  NotCanonicalShape,
  ParseError,
  InvalidInput,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncm
