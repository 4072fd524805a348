#pragma once

#include <numbers>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "normplane/vec2.hpp"

namespace normplane {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Direction angle, always reduced to [0, 2*pi).
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);

  double radians() const { return radians_; }

 private:
  double radians_ = 0.0;
};

/// Direction angle of a nonzero vector in [0, 2*pi).
double direction_angle(const Vec2& v);

/// Counterclockwise angular distance from `from` to `to`, in [0, 2*pi).
double ccw_angle(double from, double to);

enum class Orientation { kPrecedes, kSucceeds, kCollinear };

/// Sign of x1*y2 - x2*y1: `x` precedes `y` when the cross product is positive.
Orientation orientation(const Vec2& x, const Vec2& y);

/// Unit ball that is an origin-symmetric, strictly convex polygon.
///
/// Only one vertex per antipodal pair is stored; see validate_polygon for the
/// canonical order. The gauge is evaluated as the largest of the edge
/// functionals, each of which equals 1 on its edge.
class SymmetricPolygon {
 public:
  std::span<const Vec2> half_vertices() const { return half_; }
  std::vector<Vec2> full_cycle() const;
  std::size_t half_size() const { return half_.size(); }

  double gauge(const Vec2& v) const;

  // Edge functional of the half edge from full vertex i to full vertex i+1.
  const Vec2& edge_normal(std::size_t i) const { return normals_[i]; }

 private:
  friend SymmetricPolygon validate_polygon(std::vector<Vec2> vertices);
  explicit SymmetricPolygon(std::vector<Vec2> half);

  std::vector<Vec2> half_;
  std::vector<Vec2> normals_;
};

/// Builds a polygon from any list containing one vertex per antipodal pair.
/// The result starts at the vertex of smallest angle in [0, pi) and runs
/// counterclockwise. Throws NonConvex, ZeroVertex, DuplicateDirection,
/// TooFewVertices or NonFinite.
SymmetricPolygon validate_polygon(std::vector<Vec2> vertices);

enum class NormKind { kPolygon, kLp, kRegularPolygon };

/// A norm on the plane, given by its unit ball.
class NormModel {
 public:
  static NormModel polygon(SymmetricPolygon poly);
  static NormModel polygon(std::vector<Vec2> vertices);
  /// p in [1, inf]; p = 1 and p = inf are stored as their polygons.
  static NormModel lp(double p);
  /// Regular polygon with inradius 1 and a vertex at angle `rotation`.
  static NormModel regular_polygon(int sides, double rotation);
  /// max{|x|, |y|, (|x| + |y|)/sqrt(2)}: the regular octagon with vertex
  /// (1, sqrt(2) - 1).
  static NormModel octagon_max();

  double gauge(const Vec2& v) const;

  NormKind kind() const { return kind_; }
  bool is_polyhedral() const { return std::holds_alternative<SymmetricPolygon>(body_); }
  bool is_strictly_convex() const { return !is_polyhedral(); }
  const SymmetricPolygon* polygon_or_null() const { return std::get_if<SymmetricPolygon>(&body_); }

  // Exponent for kLp (possibly infinity), sides/rotation for kRegularPolygon.
  double exponent() const { return exponent_; }
  int sides() const { return sides_; }
  double rotation() const { return rotation_; }

  std::string description() const;

 private:
  struct SmoothLp {
    double p;
  };

  NormModel(NormKind kind, std::variant<SymmetricPolygon, SmoothLp> body)
      : kind_(kind), body_(std::move(body)) {}

  NormKind kind_;
  std::variant<SymmetricPolygon, SmoothLp> body_;
  double exponent_ = 0.0;
  int sides_ = 0;
  double rotation_ = 0.0;
};

/// Minkowski gauge of the unit ball; 0 only at the origin.
inline double gauge(const NormModel& norm, const Vec2& v) { return norm.gauge(v); }

/// The unique unit-sphere point in direction theta.
Vec2 sphere_point(const NormModel& norm, Angle theta);
inline Vec2 sphere_point(const NormModel& norm, double theta) {
  return sphere_point(norm, Angle(theta));
}

/// Rescales a nonzero vector onto the unit sphere.
Vec2 normalize(const NormModel& norm, const Vec2& v);

/// Full vertex cycle +-v1, ..., +-vm, counterclockwise. Throws NotPolyhedral
/// for strictly convex norms.
std::vector<Vec2> extreme_points(const NormModel& norm);

Vec2 rotate(const Vec2& v, double theta);

/// max |gauge(R(theta) u) - 1| over n_samples equally spaced sphere points u.
double rotation_invariance_check(const NormModel& norm, double theta, int n_samples);

}  // namespace normplane
