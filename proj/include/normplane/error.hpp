#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normplane {

enum class ErrorCode {
  kNonConvex,
  kZeroVertex,
  kDuplicateDirection,
  kTooFewVertices,
  kNonFinite,
  kInvalidExponent,
  kInvalidSides,
  kNotPolyhedral,
  kZeroVector,
  kNonPositiveRadius,
  kInvalidEpsilon,
  kInvalidLambda,
  kDegeneratePair,
  kNoSignChange,
  kNotOnSphere,
  kInvalidGrid,
  kInvalidTolerance,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Raised for every contract violation of the library's public operations.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace normplane
