#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "normplane/exact.hpp"
#include "normplane/norm.hpp"

namespace normplane::testing {

using exact::Rational;
using exact::RationalPolygon;
using exact::RationalVec2;

inline RationalPolygon hexagon_exact() {
  return RationalPolygon::from_vertices({{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}, {Rational(1, 2), Rational(2)}});
}

inline RationalPolygon square_exact() {
  return RationalPolygon::from_vertices({{Rational(1), Rational(1)}, {Rational(-1), Rational(1)}});
}

inline NormModel hexagon() { return NormModel::polygon(hexagon_exact().to_float()); }
inline NormModel square() { return NormModel::lp(INFINITY); }
inline NormModel euclidean() { return NormModel::lp(2.0); }
inline NormModel octagon() { return NormModel::octagon_max(); }

struct NamedNorm {
  std::string name;
  NormModel norm;
};

// The standard suite: the two worked examples, the classical extremes and
// two smooth non-Euclidean balls.
inline std::vector<NamedNorm> test_norms() {
  return {{"hexagon", hexagon()},          {"octagon", octagon()},      {"square", square()},
          {"euclidean", euclidean()},      {"l1", NormModel::lp(1.0)},  {"l3", NormModel::lp(3.0)},
          {"l1.5", NormModel::lp(1.5)},    {"hexagon12", NormModel::regular_polygon(12, 0.1)}};
}

// Random symmetric polygon with rational vertices: the convex hull of
// +-p_1, ..., +-p_k for random p_i with |numerator| <= 20 and denominator
// in [1, 20]. At most 12 half-vertices.
class RandomPolygons {
 public:
  explicit RandomPolygons(std::uint64_t seed) : rng_(seed) {}

  RationalPolygon next() {
    for (;;) {
      const int k = std::uniform_int_distribution<int>(2, 12)(rng_);
      std::vector<RationalVec2> pts;
      for (int i = 0; i < k; ++i) {
        RationalVec2 p{coordinate(), coordinate()};
        if (p.x == 0 && p.y == 0) continue;
        pts.push_back(p);
        pts.push_back(-p);
      }
      auto half = half_hull(std::move(pts));
      if (half.size() >= 2) return RationalPolygon::from_vertices(std::move(half));
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  Rational coordinate() {
    const int num = std::uniform_int_distribution<int>(-20, 20)(rng_);
    const int den = std::uniform_int_distribution<int>(1, 20)(rng_);
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
  }

  // Strict hull (collinear points dropped), then the vertices whose angle is
  // in [0, pi).
  static std::vector<RationalVec2> half_hull(std::vector<RationalVec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return {};
    std::vector<RationalVec2> hull(2 * pts.size());
    std::size_t n = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      while (n >= 2 && cross(hull[n - 1] - hull[n - 2], pts[i] - hull[n - 2]) <= 0) --n;
      hull[n++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = n + 1; i-- > 0;) {
      while (n >= lower && cross(hull[n - 1] - hull[n - 2], pts[i] - hull[n - 2]) <= 0) --n;
      hull[n++] = pts[i];
    }
    hull.resize(n - 1);
    std::vector<RationalVec2> half;
    for (const auto& v : hull) {
      if (v.y > 0 || (v.y == 0 && v.x > 0)) half.push_back(v);
    }
    return half;
  }

  std::mt19937_64 rng_;
};

}  // namespace normplane::testing
