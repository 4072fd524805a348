#pragma once

#include <optional>
#include <string>

#include "normplane/constants.hpp"

namespace normplane::cli {

struct PlotRequest {
  std::optional<Vec2> point;      // partner pair and arc anchor
  std::optional<double> epsilon;  // arc half-width parameter
  bool partners = true;
  bool arcs = true;
  bool attainment = true;
  int samples = 720;
};

/// Static SVG 1.1 drawing of the unit sphere with the requested overlays.
std::string render_svg(const NormModel& norm, const PlotRequest& request, const SweepConfig& config);

}  // namespace normplane::cli
