#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "format.hpp"
#include "normplane/iso.hpp"

namespace normplane::cli {

namespace {

constexpr double kSize = 480.0;

class Canvas {
 public:
  explicit Canvas(double extent) : scale_(0.45 * kSize / extent) {}

  std::string px(const Vec2& v) const {
    return format_double(0.5 * kSize + scale_ * v.x) + "," + format_double(0.5 * kSize - scale_ * v.y);
  }

  void polyline(const std::vector<Vec2>& pts, std::string_view style, bool closed) {
    body_ << "  <" << (closed ? "polygon" : "polyline") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << px(pts[i]);
    body_ << "\" " << style << "/>\n";
  }

  void segment(const Vec2& a, const Vec2& b, std::string_view style) { polyline({a, b}, style, false); }

  void dot(const Vec2& p, std::string_view fill) {
    const std::string c = px(p);
    const auto comma = c.find(',');
    body_ << "  <circle cx=\"" << c.substr(0, comma) << "\" cy=\"" << c.substr(comma + 1) << "\" r=\"3\" fill=\""
          << fill << "\"/>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    const std::string size = format_double(kSize);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  double scale_;
  std::ostringstream body_;
};

std::vector<Vec2> sphere(const NormModel& norm, int samples) {
  if (const auto* poly = norm.polygon_or_null()) return poly->full_cycle();
  std::vector<Vec2> pts;
  for (int k = 0; k < samples; ++k) pts.push_back(sphere_point(norm, kTwoPi * k / samples));
  return pts;
}

std::vector<Vec2> arc_points(const NormModel& norm, double start, double width, int samples) {
  std::vector<Vec2> pts;
  const int n = std::max(2, static_cast<int>(std::ceil(samples * width / kTwoPi)) + 1);
  for (int k = 0; k < n; ++k) pts.push_back(sphere_point(norm, start + width * k / (n - 1)));
  return pts;
}

}  // namespace

std::string render_svg(const NormModel& norm, const PlotRequest& request, const SweepConfig& config) {
  const auto outline = sphere(norm, request.samples);
  double extent = 1.0;
  for (const auto& p : outline) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  Canvas canvas(extent);

  canvas.segment({-extent, 0.0}, {extent, 0.0}, "stroke=\"#cccccc\" stroke-width=\"1\"");
  canvas.segment({0.0, -extent}, {0.0, extent}, "stroke=\"#cccccc\" stroke-width=\"1\"");
  canvas.polyline(outline, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"", true);

  std::vector<Vec2> anchors;
  if (request.point) {
    anchors.push_back(normalize(norm, *request.point));
  } else if (const auto* poly = norm.polygon_or_null()) {
    const auto half = poly->half_vertices();
    anchors.assign(half.begin(), half.end());
  } else {
    for (int k = 0; k < 4; ++k) anchors.push_back(sphere_point(norm, std::numbers::pi * k / 4));
  }

  if (request.arcs && request.epsilon) {
    for (const auto& x : anchors) {
      const auto arc = aset_arc(norm, x, *request.epsilon, config.solver);
      const double start = arc.start_angle();
      const double width = arc.angular_width();
      const std::string style = "fill=\"none\" stroke=\"#2a9d8f\" stroke-width=\"5\" stroke-opacity=\"0.6\"";
      canvas.polyline(arc_points(norm, start, width, request.samples), style, false);
      canvas.polyline(arc_points(norm, start + std::numbers::pi, width, request.samples), style, false);
    }
  }
  if (request.partners) {
    for (const auto& x : anchors) {
      const Vec2 y = iso_partner(norm, x, 1.0, config.solver).primary;
      canvas.segment(x, y, "stroke=\"#1d3557\" stroke-width=\"1.5\"");
      canvas.segment(x, -y, "stroke=\"#1d3557\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"");
      canvas.dot(x, "#1d3557");
      canvas.dot(y, "#457b9d");
    }
  }
  if (request.attainment) {
    for (const auto& p : james_attainment(norm, 1e-9, config)) {
      canvas.segment(p.x, p.y, "stroke=\"#e63946\" stroke-width=\"2\"");
      canvas.dot(p.x, "#e63946");
      canvas.dot(p.y, "#e63946");
    }
  }
  return canvas.finish();
}

}  // namespace normplane::cli
