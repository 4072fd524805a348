#pragma once

#include <optional>

#include "normplane/norm.hpp"

namespace normplane {

/// Tolerances shared by every monotone-bisection solver.
struct SolverConfig {
  double angle_tol = 1e-12;  // radians
  double value_tol = 1e-10;
  // Zero sets of the defect narrower than this are treated as a single root.
  double plateau_min_width = 1e-6;
};

struct AngleInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Isosceles partner of x at radius r, with the sign chosen so that
/// cross(x, primary) > 0.
struct PartnerResult {
  Vec2 primary;
  // Angular zero set of the defect when it is a nondegenerate arc; only
  // possible for r > |x| on a norm that is not strictly convex.
  std::optional<AngleInterval> plateau;
  double radius = 1.0;
};

/// A(x, eps) = D u -D, where D is the sphere arc running counterclockwise
/// from endpoint_right through the anchor to endpoint_left.
class OrthogonalityArc {
 public:
  OrthogonalityArc(Vec2 anchor, Vec2 endpoint_right, Vec2 endpoint_left, double epsilon,
                   double t_right, double t_left);

  const Vec2& anchor() const { return anchor_; }
  const Vec2& endpoint_right() const { return right_; }
  const Vec2& endpoint_left() const { return left_; }
  double epsilon() const { return epsilon_; }
  double t_right() const { return t_right_; }
  double t_left() const { return t_left_; }

  double start_angle() const { return start_; }
  double angular_width() const { return width_; }

  /// True when z or -z lies on D (angular containment).
  bool contains(const Vec2& z) const;
  /// Angular distance from the direction of z (or -z) to the nearest endpoint.
  double distance_to_endpoints(const Vec2& z) const;

 private:
  bool on_d(double angle) const;

  Vec2 anchor_, right_, left_;
  double epsilon_;
  double t_right_, t_left_;
  double start_, width_;
};

/// |x + y| - |x - y|.
double iso_defect(const NormModel& norm, const Vec2& x, const Vec2& y);

/// | |x+y|^2 - |x-y|^2 | <= 4 eps |x| |y|. Throws InvalidEpsilon unless
/// eps is in [0, 1).
bool is_approx_iso(const NormModel& norm, const Vec2& x, const Vec2& y, double eps);

/// Smallest eps with x approximately isosceles orthogonal to y, for unit x, y.
/// Throws DegeneratePair when y = +-x.
double min_feasible_epsilon(const NormModel& norm, const Vec2& x, const Vec2& y);

/// Solves |x + y| = |x - y| on the sphere of radius r by bisection over the
/// direction of y in (dir x, dir x + pi), where the defect is nonincreasing.
PartnerResult iso_partner(const NormModel& norm, const Vec2& x, double r, const SolverConfig& config = {});

/// The connected arc D with A(x, eps) = D u -D, for x on the unit sphere.
OrthogonalityArc aset_arc(const NormModel& norm, const Vec2& x, double eps, const SolverConfig& config = {});

}  // namespace normplane
