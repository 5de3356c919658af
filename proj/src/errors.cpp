#include "glsuper/errors.hpp"

namespace glsuper {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::FactorizationBoundExceeded: return "FactorizationBoundExceeded";
    case ErrorCode::MalformedSignature: return "MalformedSignature";
    case ErrorCode::NotEssentiallyTypical: return "NotEssentiallyTypical";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::InvalidCoefficient: return "InvalidCoefficient";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotSimpleRoot: return "NotSimpleRoot";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace glsuper
