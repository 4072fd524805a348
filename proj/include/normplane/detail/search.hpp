#pragma once

#include <cmath>
#include <numbers>
#include <utility>

namespace normplane::detail {

struct Bracket {
  double lo;
  double hi;
};

// Narrows [lo, hi] around the switch point of a monotone predicate that is
// false at lo and true at hi. Stops at width `tol` or when the midpoint no
// longer separates the endpoints in double precision.
template <class Pred>
Bracket bisect_predicate(double lo, double hi, Pred&& pred, double tol, int max_iterations = 200) {
  for (int i = 0; i < max_iterations && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

struct Extremum {
  double argument;
  double value;
};

// Golden-section search for the maximum of f on [a, b].
template <class F>
Extremum golden_section_max(F&& f, double a, double b, double tol) {
  constexpr double kInvPhi = std::numbers::phi - 1.0;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < 200 && b - a > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? Extremum{c, fc} : Extremum{d, fd};
}

template <class F>
Extremum golden_section_min(F&& f, double a, double b, double tol) {
  auto r = golden_section_max([&](double t) { return -f(t); }, a, b, tol);
  return {r.argument, -r.value};
}

}  // namespace normplane::detail
