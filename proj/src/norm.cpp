#include "normplane/norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "normplane/detail/half_cycle.hpp"
#include "normplane/error.hpp"

namespace normplane {

Angle::Angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2*pi.
  if (r >= kTwoPi) r = 0.0;
  radians_ = r;
}

double direction_angle(const Vec2& v) { return Angle(std::atan2(v.y, v.x)).radians(); }

double ccw_angle(double from, double to) { return Angle(to - from).radians(); }

Orientation orientation(const Vec2& x, const Vec2& y) {
  const double c = cross(x, y);
  if (c > 0.0) return Orientation::kPrecedes;
  if (c < 0.0) return Orientation::kSucceeds;
  return Orientation::kCollinear;
}

SymmetricPolygon::SymmetricPolygon(std::vector<Vec2> half) : half_(std::move(half)) {
  const std::size_t m = half_.size();
  normals_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 a = half_[i];
    const Vec2 b = i + 1 < m ? half_[i + 1] : -half_[0];
    const Vec2 d = b - a;
    const double c = cross(a, b);
    normals_.push_back({d.y / c, -d.x / c});
  }
}

std::vector<Vec2> SymmetricPolygon::full_cycle() const { return detail::full_cycle_of(half_); }

double SymmetricPolygon::gauge(const Vec2& v) const {
  double g = 0.0;
  for (const auto& n : normals_) g = std::max(g, std::abs(dot(n, v)));
  return g;
}

SymmetricPolygon validate_polygon(std::vector<Vec2> vertices) {
  for (const auto& v : vertices) {
    if (!is_finite(v)) throw Error(ErrorCode::kNonFinite, "vertex coordinates must be finite");
  }
  return SymmetricPolygon(detail::canonical_half_cycle(std::move(vertices)));
}

NormModel NormModel::polygon(SymmetricPolygon poly) {
  return NormModel(NormKind::kPolygon, std::move(poly));
}

NormModel NormModel::polygon(std::vector<Vec2> vertices) {
  return polygon(validate_polygon(std::move(vertices)));
}

NormModel NormModel::lp(double p) {
  if (std::isnan(p) || p < 1.0) throw Error(ErrorCode::kInvalidExponent, "lp exponent must be >= 1");
  std::variant<SymmetricPolygon, SmoothLp> body = SmoothLp{p};
  if (p == 1.0) {
    body = validate_polygon({{1.0, 0.0}, {0.0, 1.0}});
  } else if (std::isinf(p)) {
    body = validate_polygon({{1.0, 1.0}, {-1.0, 1.0}});
  }
  NormModel norm(NormKind::kLp, std::move(body));
  norm.exponent_ = p;
  return norm;
}

NormModel NormModel::regular_polygon(int sides, double rotation) {
  if (sides < 4 || sides % 2 != 0) {
    throw Error(ErrorCode::kInvalidSides, "regular polygon needs an even number of sides >= 4");
  }
  if (!std::isfinite(rotation)) throw Error(ErrorCode::kNonFinite, "rotation must be finite");
  const double circumradius = 1.0 / std::cos(std::numbers::pi / sides);
  std::vector<Vec2> half;
  for (int k = 0; k < sides / 2; ++k) {
    const double a = rotation + kTwoPi * k / sides;
    half.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  NormModel norm(NormKind::kRegularPolygon, validate_polygon(std::move(half)));
  norm.sides_ = sides;
  norm.rotation_ = rotation;
  return norm;
}

NormModel NormModel::octagon_max() {
  const double g = std::numbers::sqrt2 - 1.0;
  NormModel norm(NormKind::kRegularPolygon, validate_polygon({{1.0, g}, {g, 1.0}, {-g, 1.0}, {-1.0, g}}));
  norm.sides_ = 8;
  norm.rotation_ = std::numbers::pi / 8.0;
  return norm;
}

double NormModel::gauge(const Vec2& v) const {
  if (const auto* poly = std::get_if<SymmetricPolygon>(&body_)) return poly->gauge(v);
  const double p = std::get<SmoothLp>(body_).p;
  if (p == 2.0) return std::hypot(v.x, v.y);
  const double a = std::abs(v.x), b = std::abs(v.y);
  const double top = std::max(a, b);
  if (top == 0.0) return 0.0;
  return top * std::pow(std::pow(a / top, p) + std::pow(b / top, p), 1.0 / p);
}

std::string NormModel::description() const {
  std::ostringstream os;
  os.precision(15);
  switch (kind_) {
    case NormKind::kLp:
      os << "lp(p=";
      if (std::isinf(exponent_)) os << "inf"; else os << exponent_;
      os << ")";
      break;
    case NormKind::kRegularPolygon:
      os << "regular-polygon(sides=" << sides_ << ", rotation=" << rotation_ << ")";
      break;
    case NormKind::kPolygon: {
      os << "polygon[";
      const auto half = std::get<SymmetricPolygon>(body_).half_vertices();
      for (std::size_t i = 0; i < half.size(); ++i) {
        os << (i ? ", " : "") << "(" << half[i].x << ", " << half[i].y << ")";
      }
      os << "]";
      break;
    }
  }
  return os.str();
}

Vec2 sphere_point(const NormModel& norm, Angle theta) {
  const Vec2 u{std::cos(theta.radians()), std::sin(theta.radians())};
  return u / norm.gauge(u);
}

Vec2 normalize(const NormModel& norm, const Vec2& v) {
  const double g = norm.gauge(v);
  if (!(g > 0.0)) throw Error(ErrorCode::kZeroVector, "cannot normalize the zero vector");
  return v / g;
}

std::vector<Vec2> extreme_points(const NormModel& norm) {
  const auto* poly = norm.polygon_or_null();
  if (poly == nullptr) throw Error(ErrorCode::kNotPolyhedral, "the unit ball has no vertex set");
  return poly->full_cycle();
}

Vec2 rotate(const Vec2& v, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

double rotation_invariance_check(const NormModel& norm, double theta, int n_samples) {
  if (n_samples < 1) throw Error(ErrorCode::kInvalidGrid, "n_samples must be >= 1");
  double worst = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    const Vec2 u = sphere_point(norm, kTwoPi * k / n_samples);
    worst = std::max(worst, std::abs(norm.gauge(rotate(u, theta)) - 1.0));
  }
  return worst;
}

}  // namespace normplane
