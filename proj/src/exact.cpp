#include "normplane/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "normplane/detail/half_cycle.hpp"
#include "normplane/error.hpp"

namespace normplane::exact {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void parse_failure(std::string_view text) {
  throw Error(ErrorCode::kParse, "not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) parse_failure(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      parse_failure(text);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class digits(std::string(whole) + std::string(frac), 10);
    value = Rational(digits, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) parse_failure(text);
    value = Rational(mpz_class(std::string(s), 10));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const RationalVec2& v) { return "(" + to_string(v.x) + ", " + to_string(v.y) + ")"; }

Vec2 to_float(const RationalVec2& v) { return {v.x.get_d(), v.y.get_d()}; }

RationalPolygon RationalPolygon::from_vertices(std::vector<RationalVec2> vertices) {
  return RationalPolygon(detail::canonical_half_cycle(std::move(vertices)));
}

RationalPolygon::RationalPolygon(std::vector<RationalVec2> half)
    : half_(std::move(half)), full_(detail::full_cycle_of(half_)) {
  const std::size_t n = full_.size();
  normals_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RationalVec2& a = full_[i];
    const RationalVec2& b = full_[(i + 1) % n];
    const RationalVec2 d = b - a;
    const Rational c = cross(a, b);
    normals_.push_back({Rational(d.y / c), Rational(-d.x / c)});
  }
}

std::size_t RationalPolygon::cone_of(const RationalVec2& v) const {
  const std::size_t n = full_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(full_[i], v) >= 0 && cross(v, full_[(i + 1) % n]) > 0) return i;
  }
  throw Error(ErrorCode::kZeroVector, "the zero vector lies in no cone");
}

SymmetricPolygon RationalPolygon::to_float() const {
  std::vector<Vec2> half;
  half.reserve(half_.size());
  for (const auto& v : half_) half.push_back(exact::to_float(v));
  return validate_polygon(std::move(half));
}

Rational exact_gauge(const RationalPolygon& poly, const RationalVec2& v) {
  if (v.x == 0 && v.y == 0) return Rational(0);
  return dot(poly.edge_normal(poly.cone_of(v)), v);
}

std::vector<RationalVec2> exact_partner_roots(const RationalPolygon& poly, const RationalVec2& x) {
  const auto& w = poly.full_cycle();
  const std::size_t n = w.size();
  std::vector<RationalVec2> roots;

  for (std::size_t j = 0; j < n; ++j) {
    const RationalVec2& a = w[j];
    const RationalVec2 d = w[(j + 1) % n] - a;
    // y(t) = a + t d; x + y(t) = plus + t d and x - y(t) = minus - t d.
    const RationalVec2 plus = x + a;
    const RationalVec2 minus = x - a;

    // Cell boundaries: t where x +- y(t) crosses a vertex ray.
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (const auto& h : poly.half_vertices()) {
      const Rational slope = cross(h, d);
      if (slope == 0) continue;
      for (const Rational& t : {Rational(-cross(h, plus) / slope), Rational(cross(h, minus) / slope)}) {
        if (t > 0 && t < 1) cuts.push_back(t);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Rational& t0 = cuts[c];
      const Rational& t1 = cuts[c + 1];
      const Rational mid = (t0 + t1) / 2;
      // On the open cell each gauge is the linear functional of one cone.
      const RationalVec2& np = poly.edge_normal(poly.cone_of(plus + mid * d));
      const RationalVec2& nm = poly.edge_normal(poly.cone_of(minus - mid * d));
      const Rational slope = dot(np, d) + dot(nm, d);
      const Rational offset = dot(nm, minus) - dot(np, plus);
      if (slope == 0) {
        if (offset == 0) throw std::logic_error("isosceles partners form a segment on the unit sphere");
        continue;
      }
      const Rational t = offset / slope;
      if (t < t0 || t > t1) continue;
      RationalVec2 y = a + t * d;
      if (std::find(roots.begin(), roots.end(), y) == roots.end()) roots.push_back(std::move(y));
    }
  }
  return roots;
}

RationalVec2 exact_iso_partner(const RationalPolygon& poly, const RationalVec2& x) {
  if (exact_gauge(poly, x) != 1) throw Error(ErrorCode::kNotOnSphere, "x must satisfy exact_gauge(x) = 1");
  const auto roots = exact_partner_roots(poly, x);
  if (roots.size() != 2) {
    throw std::logic_error("expected exactly two isosceles partners, found " + std::to_string(roots.size()));
  }
  return cross(x, roots[0]) > 0 ? roots[0] : roots[1];
}

Rational exact_beta(const RationalPolygon& poly, const RationalVec2& x) {
  const RationalVec2 y = exact_iso_partner(poly, x);
  Rational sum = exact_gauge(poly, x + y);
  if (sum != exact_gauge(poly, x - y)) throw std::logic_error("partner is not isosceles orthogonal");
  return sum;
}

Rational exact_james(const RationalPolygon& poly) {
  Rational best(0);
  for (const auto& v : poly.half_vertices()) best = std::max(best, exact_beta(poly, v));
  return best;
}

std::vector<ExactAttainmentPair> exact_james_attainment(const RationalPolygon& poly) {
  const Rational j = exact_james(poly);
  std::vector<ExactAttainmentPair> pairs;
  for (const auto& v : poly.half_vertices()) {
    RationalVec2 y = exact_iso_partner(poly, v);
    const Rational sum = exact_gauge(poly, v + y);
    if (sum != j) continue;
    const Rational diff = exact_gauge(poly, v - y);
    pairs.push_back({v, std::move(y), sum, Rational(sum - diff)});
  }
  return pairs;
}

}  // namespace normplane::exact
