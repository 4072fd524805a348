#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "normplane/exact.hpp"
#include "normplane/norm.hpp"

namespace normplane::cli {

/// A loaded norm: the float model, its rational polygon when every vertex is
/// rational, and the normalized specification document.
struct LoadedNorm {
  NormModel model;
  std::optional<exact::RationalPolygon> exact;
  nlohmann::json spec;
};

inline constexpr std::string_view kPresets[] = {"octagon-max", "hexagon-paper", "square", "euclidean"};

/// Builds a norm from a specification document. Throws Error(kParse) for
/// missing, unexpected or mistyped fields.
LoadedNorm norm_from_spec(const nlohmann::json& spec);

/// Parses the text of a specification file. Syntax errors are reported as
/// "<origin>:<line>:<column>: ...".
LoadedNorm norm_from_text(std::string_view text, std::string_view origin);

/// A preset name, or else the path of a specification file.
LoadedNorm load_norm(const std::string& name_or_path);

}  // namespace normplane::cli
