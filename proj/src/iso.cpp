#include "normplane/iso.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "normplane/detail/search.hpp"
#include "normplane/error.hpp"

namespace normplane {

namespace {

constexpr double kSphereTol = 1e-9;

void require_epsilon(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw Error(ErrorCode::kInvalidEpsilon, "epsilon must lie in [0, 1)");
}

double angular_gap(double a, double b) {
  const double d = ccw_angle(a, b);
  return std::min(d, kTwoPi - d);
}

}  // namespace

OrthogonalityArc::OrthogonalityArc(Vec2 anchor, Vec2 endpoint_right, Vec2 endpoint_left, double epsilon,
                                   double t_right, double t_left)
    : anchor_(anchor),
      right_(endpoint_right),
      left_(endpoint_left),
      epsilon_(epsilon),
      t_right_(t_right),
      t_left_(t_left),
      start_(direction_angle(endpoint_right)),
      width_(ccw_angle(start_, direction_angle(endpoint_left))) {}

bool OrthogonalityArc::on_d(double angle) const { return ccw_angle(start_, angle) <= width_; }

bool OrthogonalityArc::contains(const Vec2& z) const {
  const double a = direction_angle(z);
  return on_d(a) || on_d(Angle(a + std::numbers::pi).radians());
}

double OrthogonalityArc::distance_to_endpoints(const Vec2& z) const {
  const double end = Angle(start_ + width_).radians();
  double best = kTwoPi;
  for (double a : {direction_angle(z), direction_angle(-z)}) {
    best = std::min({best, angular_gap(a, start_), angular_gap(a, end)});
  }
  return best;
}

double iso_defect(const NormModel& norm, const Vec2& x, const Vec2& y) {
  return norm.gauge(x + y) - norm.gauge(x - y);
}

bool is_approx_iso(const NormModel& norm, const Vec2& x, const Vec2& y, double eps) {
  require_epsilon(eps);
  const double s = norm.gauge(x + y), d = norm.gauge(x - y);
  return std::abs(s * s - d * d) <= 4.0 * eps * norm.gauge(x) * norm.gauge(y);
}

double min_feasible_epsilon(const NormModel& norm, const Vec2& x, const Vec2& y) {
  const double gx = norm.gauge(x), gy = norm.gauge(y);
  if (gx == 0.0 || gy == 0.0) throw Error(ErrorCode::kZeroVector, "pair contains the zero vector");
  if (std::abs(cross(x, y)) <= 1e-14 * euclidean_length(x) * euclidean_length(y)) {
    throw Error(ErrorCode::kDegeneratePair, "y = +-x admits no epsilon below 1");
  }
  const double s = norm.gauge(x + y), d = norm.gauge(x - y);
  return std::abs(s * s - d * d) / (4.0 * gx * gy);
}

namespace {

// Secant step on the chord between the bracket endpoints. On a polygon both
// endpoints share an edge, the defect is affine along it and the step lands
// on the root up to rounding.
Vec2 polish_root(const NormModel& norm, const Vec2& x, double r, const Vec2& a, const Vec2& b) {
  const double da = iso_defect(norm, x, a);
  const double db = iso_defect(norm, x, b);
  if (!(da > 0.0) || !(db <= 0.0)) return 0.5 * (a + b);
  const Vec2 c = a + (da / (da - db)) * (b - a);
  return r * normalize(norm, c);
}

}  // namespace

PartnerResult iso_partner(const NormModel& norm, const Vec2& x, double r, const SolverConfig& config) {
  if (!is_finite(x)) throw Error(ErrorCode::kNonFinite, "x must be finite");
  if (x.x == 0.0 && x.y == 0.0) throw Error(ErrorCode::kZeroVector, "x must be nonzero");
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorCode::kNonPositiveRadius, "radius must be positive");

  auto defect_at = [&](double theta) { return iso_defect(norm, x, r * sphere_point(norm, theta)); };
  const double lo = direction_angle(x);
  const double hi = lo + std::numbers::pi;
  if (!(defect_at(lo) > 0.0 && defect_at(hi) < 0.0)) {
    throw Error(ErrorCode::kNoSignChange, "defect does not change sign on the half sphere");
  }

  const auto root = detail::bisect_predicate(
      lo, hi, [&](double t) { return defect_at(t) <= 0.0; }, config.angle_tol);

  PartnerResult result;
  result.radius = r;
  result.primary = polish_root(norm, x, r, r * sphere_point(norm, root.lo), r * sphere_point(norm, root.hi));

  if (norm.is_polyhedral() && r > norm.gauge(x) * (1.0 + 1e-12)) {
    const double first = detail::bisect_predicate(
        lo, hi, [&](double t) { return defect_at(t) <= config.value_tol; }, config.angle_tol).hi;
    const double last = detail::bisect_predicate(
        lo, hi, [&](double t) { return defect_at(t) < -config.value_tol; }, config.angle_tol).lo;
    if (last - first > config.plateau_min_width) {
      const double start = Angle(first).radians();
      result.plateau = AngleInterval{start, start + (last - first)};
      result.primary = r * sphere_point(norm, 0.5 * (first + last));
    }
  }
  return result;
}

OrthogonalityArc aset_arc(const NormModel& norm, const Vec2& x, double eps, const SolverConfig& config) {
  require_epsilon(eps);
  if (std::abs(norm.gauge(x) - 1.0) > kSphereTol) throw Error(ErrorCode::kNotOnSphere, "x must be a unit vector");
  const Vec2 y = iso_partner(norm, x, 1.0, config).primary;
  if (eps == 0.0) return OrthogonalityArc(y, y, y, eps, 1.0, 1.0);

  // Boundary of {t : x is eps-orthogonal to the normalized (side*(1-t)x + t y)},
  // an interval [t*, 1] because the defect magnitude is monotone in t.
  auto boundary = [&](double side) {
    auto point = [&](double t) { return normalize(norm, (side * (1.0 - t)) * x + t * y); };
    auto inside = [&](double t) {
      const Vec2 u = point(t);
      const double s = norm.gauge(x + u), d = norm.gauge(x - u);
      return std::abs(s * s - d * d) <= 4.0 * eps;
    };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
      if (angular_gap(direction_angle(point(lo)), direction_angle(point(hi))) <= 0.25 * config.angle_tol) break;
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (inside(mid) ? hi : lo) = mid;
    }
    return std::pair{hi, point(hi)};
  };

  const auto [t_right, right] = boundary(1.0);
  const auto [t_left, left] = boundary(-1.0);
  return OrthogonalityArc(y, right, left, eps, t_right, t_left);
}

}  // namespace normplane
