#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normplane/norm.hpp"
#include "normplane/vec2.hpp"

namespace normplane::exact {

// GMP rationals are kept in canonical form (lowest terms, positive
// denominator) by every arithmetic operation.
using Rational = mpq_class;
using RationalVec2 = BasicVec2<Rational>;

/// Parses "p/q", an integer, or a terminating decimal such as "-0.25".
/// Throws Error(kParse) on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
/// "(x, y)" with both coordinates formatted as by to_string.
std::string to_string(const RationalVec2& v);

Vec2 to_float(const RationalVec2& v);

/// Symmetric polygon with rational vertices; same invariants as
/// SymmetricPolygon, verified with exact sign tests.
class RationalPolygon {
 public:
  static RationalPolygon from_vertices(std::vector<RationalVec2> vertices);

  std::span<const RationalVec2> half_vertices() const { return half_; }
  const std::vector<RationalVec2>& full_cycle() const { return full_; }

  // Functional equal to 1 on the full-cycle edge from vertex i to vertex i+1.
  const RationalVec2& edge_normal(std::size_t i) const { return normals_[i]; }

  /// Index i of the full-cycle edge whose cone {s w_i + t w_{i+1}: s >= 0, t > 0}
  /// contains the nonzero vector v.
  std::size_t cone_of(const RationalVec2& v) const;

  SymmetricPolygon to_float() const;

 private:
  explicit RationalPolygon(std::vector<RationalVec2> half);

  std::vector<RationalVec2> half_;
  std::vector<RationalVec2> full_;
  std::vector<RationalVec2> normals_;
};

Rational exact_gauge(const RationalPolygon& poly, const RationalVec2& v);

/// Every solution y on the unit sphere of |x + y| = |x - y|, found edge by
/// edge on the linearity cells of both gauges. For unit x there are exactly
/// two, y and -y.
std::vector<RationalVec2> exact_partner_roots(const RationalPolygon& poly, const RationalVec2& x);

/// The unit isosceles partner y of the unit vector x with cross(x, y) > 0.
/// Throws NotOnSphere when exact_gauge(x) != 1.
RationalVec2 exact_iso_partner(const RationalPolygon& poly, const RationalVec2& x);

Rational exact_beta(const RationalPolygon& poly, const RationalVec2& x);

/// Maximum of exact_beta over the vertices.
Rational exact_james(const RationalPolygon& poly);

struct ExactAttainmentPair {
  RationalVec2 x;
  RationalVec2 y;
  Rational value;
  Rational iso_defect;
};

/// Vertex pairs (v, w) with beta(v) = J, w the partner of v.
std::vector<ExactAttainmentPair> exact_james_attainment(const RationalPolygon& poly);

}  // namespace normplane::exact
