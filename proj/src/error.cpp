#include "normplane/error.hpp"

namespace normplane {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonConvex: return "NonConvex";
    case ErrorCode::kZeroVertex: return "ZeroVertex";
    case ErrorCode::kDuplicateDirection: return "DuplicateDirection";
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kInvalidSides: return "InvalidSides";
    case ErrorCode::kNotPolyhedral: return "NotPolyhedral";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kInvalidLambda: return "InvalidLambda";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kNoSignChange: return "NoSignChange";
    case ErrorCode::kNotOnSphere: return "NotOnSphere";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kInvalidTolerance: return "InvalidTolerance";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace normplane
