#include "normplane/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "normplane/detail/search.hpp"
#include "normplane/error.hpp"

namespace normplane {

namespace {

constexpr double kSphereTol = 1e-9;
constexpr double kAttainmentDefectTol = 1e-8;

void require_unit(const NormModel& norm, const Vec2& x) {
  if (!is_finite(x) || std::abs(norm.gauge(x) - 1.0) > kSphereTol) {
    throw Error(ErrorCode::kNotOnSphere, "x must be a unit vector");
  }
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error(ErrorCode::kInvalidLambda, "lambda must lie in (0, 1)");
}

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidTolerance, "tolerance must be positive");
}

// Continuous parametrization of the unit sphere used by the sweeps. For a
// polygon the parameter runs along the boundary, one unit per edge, so every
// vertex is a grid point. Otherwise the parameter is the direction angle.
class SpherePath {
 public:
  SpherePath(const NormModel& norm, const SweepConfig& config) : norm_(norm), config_(config) {
    if (const auto* poly = norm.polygon_or_null()) cycle_ = poly->full_cycle();
  }

  double full_length() const { return cycle_.empty() ? kTwoPi : static_cast<double>(cycle_.size()); }

  Vec2 point(double s) const {
    if (cycle_.empty()) return sphere_point(norm_, s);
    const double n = static_cast<double>(cycle_.size());
    s = std::fmod(s, n);
    if (s < 0.0) s += n;
    auto i = static_cast<std::size_t>(s);
    if (i >= cycle_.size()) i = 0;
    const double f = s - static_cast<double>(i);
    const Vec2& a = cycle_[i];
    const Vec2& b = cycle_[(i + 1) % cycle_.size()];
    return (1.0 - f) * a + f * b;
  }

  // Uniform samples over the half sphere or the whole sphere.
  std::vector<double> samples(bool full) const {
    const double length = full ? full_length() : 0.5 * full_length();
    const int count = cycle_.empty() ? config_.directions
                                     : static_cast<int>(std::lround(length)) * config_.edge_samples;
    std::vector<double> s(static_cast<std::size_t>(std::max(count, 2)));
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = length * static_cast<double>(k) / static_cast<double>(s.size());
    return s;
  }

 private:
  const NormModel& norm_;
  const SweepConfig& config_;
  std::vector<Vec2> cycle_;
};

struct SweepOutcome {
  detail::Extremum best;
  std::vector<double> params;
  std::vector<double> values;
};

// Grid maximum (lowest index wins ties) followed by golden-section
// refinement on the two cells around it.
template <class F>
SweepOutcome sweep_max(const SpherePath& path, bool full, F&& f, double tol) {
  SweepOutcome out;
  out.params = path.samples(full);
  out.values.reserve(out.params.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < out.params.size(); ++k) {
    out.values.push_back(f(out.params[k]));
    if (out.values[k] > out.values[best]) best = k;
  }
  const double step = out.params[1] - out.params[0];
  const double center = out.params[best];
  const auto refined = detail::golden_section_max(f, center - step, center + step, tol);
  out.best = refined.value > out.values[best] ? refined : detail::Extremum{center, out.values[best]};
  return out;
}

template <class F>
SweepOutcome sweep_min(const SpherePath& path, bool full, F&& f, double tol) {
  auto out = sweep_max(path, full, [&](double s) { return -f(s); }, tol);
  out.best.value = -out.best.value;
  for (auto& v : out.values) v = -v;
  return out;
}

double partner_sum(const NormModel& norm, const Vec2& x, const SolverConfig& config) {
  return norm.gauge(x + iso_partner(norm, x, 1.0, config).primary);
}

double lambda_value(const NormModel& norm, const Vec2& x, double lambda, const SolverConfig& config) {
  const double r = (1.0 - lambda) / lambda;
  const Vec2 y = iso_partner(norm, x, r, config).primary / r;
  return norm.gauge(lambda * x + (1.0 - lambda) * y);
}

// Partner y of x on the sphere with |x - y| = eps, searched along the
// counterclockwise half sphere from x to -x where |x - y| is nondecreasing
// and |x + y| nonincreasing. `near` picks the first such y (largest |x + y|),
// otherwise the last one (smallest |x + y|).
Vec2 distance_partner(const NormModel& norm, const Vec2& x, double eps, bool near, const SolverConfig& config) {
  const double lo = direction_angle(x);
  const double hi = lo + std::numbers::pi;
  auto dist = [&](double t) { return norm.gauge(x - sphere_point(norm, t)); };
  if (near) {
    if (dist(hi) < eps) return sphere_point(norm, hi);
    const auto b = detail::bisect_predicate(lo, hi, [&](double t) { return dist(t) >= eps; }, config.angle_tol);
    return sphere_point(norm, b.hi);
  }
  if (dist(hi) <= eps) return sphere_point(norm, hi);
  const auto b = detail::bisect_predicate(lo, hi, [&](double t) { return dist(t) > eps; }, config.angle_tol);
  return sphere_point(norm, b.lo);
}

double convexity_objective(const NormModel& norm, const Vec2& x, double eps, const SolverConfig& config) {
  return 1.0 - 0.5 * norm.gauge(x + distance_partner(norm, x, eps, true, config));
}

double smoothness_objective(const NormModel& norm, const Vec2& x, double eps, const SolverConfig& config) {
  return 1.0 - 0.5 * norm.gauge(x + distance_partner(norm, x, eps, false, config));
}

SweepOutcome delta_sweep(const NormModel& norm, double eps, const SweepConfig& config) {
  const SpherePath path(norm, config);
  return sweep_min(
      path, true, [&](double s) { return convexity_objective(norm, path.point(s), eps, config.solver); },
      config.refine_tol);
}

double delta_unchecked(const NormModel& norm, double eps, const SweepConfig& config) {
  if (eps == 0.0) return 0.0;
  return std::max(0.0, delta_sweep(norm, eps, config).best.value);
}

double rho_unchecked(const NormModel& norm, double eps, const SweepConfig& config) {
  if (eps == 0.0) return 0.0;
  const SpherePath path(norm, config);
  const auto out = sweep_max(
      path, true, [&](double s) { return smoothness_objective(norm, path.point(s), eps, config.solver); },
      config.refine_tol);
  return out.best.value;
}

AttainmentPair james_pair(const NormModel& norm, const Vec2& x, const SolverConfig& config) {
  AttainmentPair pair;
  pair.x = x;
  pair.y = iso_partner(norm, x, 1.0, config).primary;
  pair.value = std::min(norm.gauge(x + pair.y), norm.gauge(x - pair.y));
  pair.iso_defect = iso_defect(norm, x, pair.y);
  pair.verified = std::abs(pair.iso_defect) <= kAttainmentDefectTol;
  return pair;
}

}  // namespace

double beta(const NormModel& norm, const Vec2& x, const SolverConfig& config) {
  require_unit(norm, x);
  return partner_sum(norm, x, config);
}

double alpha(const NormModel& norm, const Vec2& x, const SolverConfig& config) { return beta(norm, x, config); }

double beta_lambda(const NormModel& norm, const Vec2& x, double lambda, const SolverConfig& config) {
  require_lambda(lambda);
  require_unit(norm, x);
  return lambda_value(norm, x, lambda, config);
}

double james(const NormModel& norm, const SweepConfig& config) {
  if (const auto* poly = norm.polygon_or_null()) {
    double best = 0.0;
    for (const auto& v : poly->half_vertices()) best = std::max(best, partner_sum(norm, v, config.solver));
    return best;
  }
  const SpherePath path(norm, config);
  return sweep_max(path, false, [&](double s) { return partner_sum(norm, path.point(s), config.solver); },
                   config.refine_tol)
      .best.value;
}

double james_generalized(const NormModel& norm, double lambda, const SweepConfig& config) {
  require_lambda(lambda);
  const SpherePath path(norm, config);
  return sweep_max(
             path, false, [&](double s) { return lambda_value(norm, path.point(s), lambda, config.solver); },
             config.refine_tol)
      .best.value;
}

double schaffer(const NormModel& norm, const SweepConfig& config) {
  const SpherePath path(norm, config);
  return sweep_min(path, false, [&](double s) { return partner_sum(norm, path.point(s), config.solver); },
                   config.refine_tol)
      .best.value;
}

double delta(const NormModel& norm, double eps, const SweepConfig& config) {
  if (!(eps >= 0.0 && eps < 2.0)) throw Error(ErrorCode::kInvalidEpsilon, "delta needs epsilon in [0, 2)");
  return delta_unchecked(norm, eps, config);
}

double rho(const NormModel& norm, double eps, const SweepConfig& config) {
  if (!(eps >= 0.0 && eps <= 2.0)) throw Error(ErrorCode::kInvalidEpsilon, "rho needs epsilon in [0, 2]");
  return rho_unchecked(norm, eps, config);
}

double rho_prime(const NormModel& norm, double eps, const SweepConfig& config) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::kInvalidEpsilon, "rho' needs epsilon >= 0");
  if (eps == 0.0) return 0.0;
  const int n = std::max(config.rho_prime_grid, 2);
  const double step = std::numbers::pi / n;

  auto objective = [&](const Vec2& x, double ty) {
    const Vec2 y = eps * sphere_point(norm, ty);
    return 0.5 * (norm.gauge(x + y) + norm.gauge(x - y)) - 1.0;
  };
  // Inner maximization over y for fixed x: grid over the half sphere plus
  // golden-section refinement.
  auto inner = [&](double tx) {
    const Vec2 x = sphere_point(norm, tx);
    double best = objective(x, 0.0), best_t = 0.0;
    for (int k = 1; k < n; ++k) {
      const double v = objective(x, step * k);
      if (v > best) best = v, best_t = step * k;
    }
    const auto r = detail::golden_section_max([&](double t) { return objective(x, t); }, best_t - step,
                                              best_t + step, config.refine_tol);
    return std::max(best, r.value);
  };

  double best = inner(0.0), best_t = 0.0;
  for (int k = 1; k < n; ++k) {
    const double v = inner(step * k);
    if (v > best) best = v, best_t = step * k;
  }
  const auto r = detail::golden_section_max(inner, best_t - step, best_t + step, config.refine_tol);
  return std::clamp(std::max(best, r.value), 0.0, eps);
}

std::vector<AttainmentPair> james_attainment(const NormModel& norm, double tol, const SweepConfig& config) {
  require_tolerance(tol);
  std::vector<AttainmentPair> pairs;
  if (const auto* poly = norm.polygon_or_null()) {
    const double j = james(norm, config);
    for (const auto& v : poly->half_vertices()) {
      auto pair = james_pair(norm, v, config.solver);
      if (pair.value >= j - tol) pairs.push_back(pair);
    }
    return pairs;
  }
  const SpherePath path(norm, config);
  const auto out = sweep_max(path, false, [&](double s) { return partner_sum(norm, path.point(s), config.solver); },
                             config.refine_tol);
  for (std::size_t k = 0; k < out.params.size(); ++k) {
    if (out.values[k] >= out.best.value - tol) pairs.push_back(james_pair(norm, path.point(out.params[k]), config.solver));
  }
  if (std::find(out.params.begin(), out.params.end(), out.best.argument) == out.params.end()) {
    pairs.push_back(james_pair(norm, path.point(out.best.argument), config.solver));
  }
  return pairs;
}

std::vector<AttainmentPair> delta_attainment(const NormModel& norm, double eps, double tol,
                                             const SweepConfig& config) {
  if (!(eps > 0.0 && eps < 2.0)) throw Error(ErrorCode::kInvalidEpsilon, "epsilon must lie in (0, 2)");
  require_tolerance(tol);
  const SpherePath path(norm, config);
  const auto out = delta_sweep(norm, eps, config);
  const double d = out.best.value;
  const double eps0 = std::abs(1.0 + d * d - 2.0 * d - 0.25 * eps * eps);

  auto make = [&](double s) {
    AttainmentPair pair;
    pair.x = path.point(s);
    pair.y = distance_partner(norm, pair.x, eps, true, config.solver);
    const double sum = norm.gauge(pair.x + pair.y), diff = norm.gauge(pair.x - pair.y);
    pair.value = 1.0 - 0.5 * sum;
    pair.iso_defect = sum - diff;
    pair.approx_epsilon = eps0;
    pair.verified = std::abs(sum * sum - diff * diff) <=
                    4.0 * (eps0 + tol) * norm.gauge(pair.x) * norm.gauge(pair.y);
    return pair;
  };

  std::vector<AttainmentPair> pairs;
  for (std::size_t k = 0; k < out.params.size(); ++k) {
    if (out.values[k] <= d + tol) pairs.push_back(make(out.params[k]));
  }
  if (std::find(out.params.begin(), out.params.end(), out.best.argument) == out.params.end()) {
    pairs.push_back(make(out.best.argument));
  }
  return pairs;
}

double james_from_delta(const NormModel& norm, int grid, const SweepConfig& config) {
  if (grid < 2) throw Error(ErrorCode::kInvalidGrid, "grid must be >= 2");
  const double a = std::numbers::sqrt2 - 0.01, b = 2.0;
  // h(eps) = 2 - 2 delta(eps) - eps; h(2) <= 0 always, so it is never evaluated.
  auto positive = [&](double e) { return e < 2.0 && 2.0 - 2.0 * delta_unchecked(norm, e, config) - e > 0.0; };
  int last = -1;
  for (int k = 0; k < grid; ++k) {
    if (positive(a + (b - a) * k / (grid - 1))) last = k;
  }
  if (last < 0) return a;
  if (last == grid - 1) return b;
  const double lo = a + (b - a) * last / (grid - 1);
  const double hi = a + (b - a) * (last + 1) / (grid - 1);
  const auto br = detail::bisect_predicate(lo, hi, [&](double e) { return !positive(e); }, 1e-9);
  return 0.5 * (br.lo + br.hi);
}

double schaffer_from_rho(const NormModel& norm, int grid, const SweepConfig& config) {
  if (grid < 2) throw Error(ErrorCode::kInvalidGrid, "grid must be >= 2");
  const double a = 0.99, b = std::numbers::sqrt2 + 0.01;
  auto positive = [&](double e) { return e - (2.0 - 2.0 * rho_unchecked(norm, e, config)) > 0.0; };
  int first = -1;
  for (int k = 0; k < grid; ++k) {
    if (positive(a + (b - a) * k / (grid - 1))) {
      first = k;
      break;
    }
  }
  if (first == 0) return a;
  if (first < 0) return b;
  const double lo = a + (b - a) * (first - 1) / (grid - 1);
  const double hi = a + (b - a) * first / (grid - 1);
  const auto br = detail::bisect_predicate(lo, hi, positive, 1e-9);
  return 0.5 * (br.lo + br.hi);
}

}  // namespace normplane
