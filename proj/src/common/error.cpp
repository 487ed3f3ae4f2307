#include "common/error.hpp"

namespace ncm {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::UnitViolation: return "UnitViolation";
    case ErrorKind::PossiblyInfiniteDimensional: return "PossiblyInfiniteDimensional";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::NonBasicTop: return "NonBasicTop";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::ZeroIdempotent: return "ZeroIdempotent";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotMonomorphism: return "NotMonomorphism";
    case ErrorKind::QuotientNotSemisimple: return "QuotientNotSemisimple";
    case ErrorKind::ActionsDoNotCommute: return "ActionsDoNotCommute";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EmptyComposition: return "EmptyComposition";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::CurveMismatch: return "CurveMismatch";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::DivisorViolation: return "DivisorViolation";
    case ErrorKind::PointNotSpecial: return "PointNotSpecial";
    case ErrorKind::TiltingObstruction: return "TiltingObstruction";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::RepeatedLambda: return "RepeatedLambda";
    case ErrorKind::NotCanonicalShape: return "NotCanonicalShape";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace ncm
