#include "normplane/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "normplane/detail/search.hpp"
#include "normplane/iso.hpp"
#include "normplane/oracle.hpp"

namespace normplane {

namespace {

class CheckList {
 public:
  void add(std::string name, double residual, double tolerance) {
    const bool ok = std::isfinite(residual) && residual <= tolerance;
    results_.push_back({std::move(name), ok, residual, tolerance});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  Vec2 vector() { return {uniform(-3.0, 3.0), uniform(-3.0, 3.0)}; }
  double angle() { return uniform(0.0, kTwoPi); }

  std::mt19937_64 rng;
};

void gauge_checks(const NormModel& norm, const ReportOptions& options, CheckList& checks) {
  Sampler s(options.seed);
  double homogeneity = 0.0, triangle = 0.0, symmetry = 0.0, sphere = 0.0, direction = 0.0, orient = 0.0;
  for (int i = 0; i < options.random_samples; ++i) {
    const Vec2 u = s.vector(), v = s.vector();
    const double t = s.uniform(-5.0, 5.0);
    const double gv = norm.gauge(v);
    homogeneity = std::max(homogeneity, std::abs(norm.gauge(t * v) - std::abs(t) * gv) / (std::abs(t) * gv));
    triangle = std::max(triangle, norm.gauge(u + v) - norm.gauge(u) - gv);
    symmetry = std::max(symmetry, std::abs(norm.gauge(-v) - gv) / gv);

    const double theta = s.angle();
    const Vec2 p = sphere_point(norm, theta);
    sphere = std::max(sphere, std::abs(norm.gauge(p) - 1.0));
    const double d = ccw_angle(theta, direction_angle(p));
    direction = std::max(direction, std::min(d, kTwoPi - d));

    const double scale = s.uniform(0.1, 10.0);
    const bool antisymmetric = orientation(u, v) == orientation(v, u) ? orientation(u, v) == Orientation::kCollinear
                                                                      : true;
    const bool scaled = orientation(scale * u, v) == orientation(u, v) && orientation(u, scale * v) == orientation(u, v);
    orient = std::max(orient, (antisymmetric && scaled) ? 0.0 : 1.0);
  }
  checks.add("gauge.homogeneity", homogeneity, 1e-12);
  checks.add("gauge.triangle_inequality", std::max(triangle, 0.0), 1e-12);
  checks.add("gauge.symmetry", symmetry, 1e-15);
  checks.add("sphere_point.on_sphere", sphere, 1e-12);
  checks.add("sphere_point.direction", direction, 1e-12);
  checks.add("orientation.antisymmetric_scale_invariant", orient, 0.0);

  if (const auto* poly = norm.polygon_or_null()) {
    double worst = 0.0;
    for (const auto& v : poly->full_cycle()) worst = std::max(worst, std::abs(norm.gauge(v) - 1.0));
    checks.add("gauge.extreme_points_unit", worst, 1e-12);
  }
}

void iso_checks(const NormModel& norm, const ReportOptions& options, CheckList& checks) {
  Sampler s(options.seed + 1);
  const SolverConfig& solver = options.sweep.solver;
  double radius = 0.0, defect = 0.0, sign = 0.0, plateau = 0.0, oracle_gap = 0.0, feasible = 0.0, flip = 0.0;
  oracle::GridSpec grid{options.oracle_directions, 4, 1e-12};
  for (int i = 0; i < options.random_samples; ++i) {
    const Vec2 x = s.vector();
    const double r = s.uniform(0.05, 1.0) * norm.gauge(x);
    const auto res = iso_partner(norm, x, r, solver);
    radius = std::max(radius, std::abs(norm.gauge(res.primary) - r) / r);
    defect = std::max(defect, std::abs(iso_defect(norm, x, res.primary)) / r);
    sign = std::max(sign, cross(x, res.primary) > 0.0 ? 0.0 : 1.0);
    plateau = std::max(plateau, res.plateau ? 1.0 : 0.0);

    const Vec2 y = s.vector();
    flip = std::max(flip, std::abs(iso_defect(norm, x, -y) + iso_defect(norm, x, y)));

    const Vec2 ux = sphere_point(norm, s.angle()), uy = sphere_point(norm, s.angle());
    if (std::abs(cross(ux, uy)) > 1e-6) feasible = std::max(feasible, min_feasible_epsilon(norm, ux, uy));
  }
  for (int i = 0; i < 4; ++i) {
    const Vec2 x = sphere_point(norm, s.angle());
    const Vec2 fast = iso_partner(norm, x, 1.0, solver).primary;
    const Vec2 slow = oracle::oracle_partner(norm, x, grid);
    oracle_gap = std::max({oracle_gap, std::abs(fast.x - slow.x), std::abs(fast.y - slow.y)});
  }
  checks.add("partner.radius", radius, 1e-9);
  checks.add("partner.defect", defect, 1e-8);
  checks.add("partner.orientation", sign, 0.0);
  checks.add("partner.unique_below_norm", plateau, 0.0);
  checks.add("partner.matches_oracle", oracle_gap, 1e-6);
  checks.add("iso_defect.sign_flip", flip, 1e-12);
  checks.add("approx_iso.feasible_below_one", feasible, 1.0 - 1e-12);

  double arc = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Vec2 x = sphere_point(norm, s.angle());
    const auto d = aset_arc(norm, x, 0.4, solver);
    const int n = 1024;
    for (int k = 0; k < n; ++k) {
      const Vec2 z = sphere_point(norm, kTwoPi * k / n);
      if (d.contains(z) != is_approx_iso(norm, x, z, 0.4) && d.distance_to_endpoints(z) > 2.0 * solver.angle_tol) {
        arc += 1.0;
      }
    }
  }
  checks.add("aset.arc_membership", arc, 0.0);
}

void constant_checks(const NormModel& norm, const ReportOptions& options, CheckList& checks) {
  const SweepConfig& cfg = options.sweep;
  Sampler s(options.seed + 2);
  const double j = james(norm, cfg);
  const double sc = schaffer(norm, cfg);
  checks.add("james.lower_bound", std::max(0.0, std::numbers::sqrt2 - j), 1e-9);
  checks.add("james.upper_bound", std::max(0.0, j - 2.0), 1e-9);
  checks.add("schaffer.at_most_james", std::max(0.0, sc - j), 1e-9);
  checks.add("schaffer.range", std::max({0.0, 1.0 - sc, sc - std::numbers::sqrt2}), 1e-6);

  double beta_sym = 0.0, half = 0.0;
  for (int i = 0; i < options.random_samples; ++i) {
    const Vec2 x = sphere_point(norm, s.angle());
    const double b = beta(norm, x, cfg.solver);
    beta_sym = std::max(beta_sym, std::abs(b - beta(norm, -x, cfg.solver)));
    half = std::max(half, std::abs(beta_lambda(norm, x, 0.5, cfg.solver) - 0.5 * b));
  }
  checks.add("beta.even", beta_sym, 1e-9);
  checks.add("beta_lambda.half", half, 1e-10);

  double attain = 0.0;
  for (const auto& p : james_attainment(norm, options.attainment_tol, cfg)) {
    attain = std::max(attain, std::abs(p.iso_defect));
  }
  checks.add("james.attainment_isosceles", attain, 1e-8);

  double monotone = 0.0, rho_above = 0.0, rho_prime_cap = 0.0, previous = 0.0;
  for (double e : options.epsilons) {
    const double d = delta(norm, e, cfg);
    monotone = std::max(monotone, previous - d);
    previous = d;
    rho_above = std::max(rho_above, d - rho(norm, e, cfg));
    rho_prime_cap = std::max(rho_prime_cap, rho_prime(norm, e, cfg) - e);
  }
  checks.add("delta.nondecreasing", std::max(monotone, 0.0), 1e-9);
  checks.add("delta.at_zero", std::abs(delta(norm, 0.0, cfg)), 0.0);
  checks.add("rho.at_least_delta", std::max(rho_above, 0.0), 1e-9);
  checks.add("rho_prime.at_most_epsilon", std::max(rho_prime_cap, 0.0), 1e-12);

  double distance = 0.0, approx = 0.0, eps0_range = 0.0;
  for (double e : {0.5, 1.0, 1.5}) {
    for (const auto& p : delta_attainment(norm, e, options.attainment_tol, cfg)) {
      distance = std::max(distance, std::abs(norm.gauge(p.x - p.y) - e));
      approx = std::max(approx, p.verified ? 0.0 : 1.0);
      eps0_range = std::max(eps0_range, (*p.approx_epsilon >= 0.0 && *p.approx_epsilon < 1.0) ? 0.0 : 1.0);
    }
  }
  checks.add("delta.attainment_distance", distance, 1e-8);
  checks.add("delta.attainment_approx_isosceles", approx, 0.0);
  checks.add("delta.attainment_eps0_range", eps0_range, 0.0);

  checks.add("james_from_delta.agrees", std::abs(james_from_delta(norm, options.modulus_grid, cfg) - j), 2e-3);
  checks.add("schaffer_from_rho.agrees", std::abs(schaffer_from_rho(norm, options.modulus_grid, cfg) - sc), 2e-3);

  const oracle::GridSpec grid{options.oracle_directions, 4, 1e-12};
  checks.add("oracle.james", std::abs(oracle::oracle_james(norm, grid) - j), 5e-3);
  checks.add("oracle.schaffer", std::abs(oracle::oracle_schaffer(norm, grid) - sc), 5e-3);

  if (norm.is_strictly_convex()) {
    // The sweep maximizer of min{|lx + (1-l)y|, |lx - (1-l)y|} must be an
    // isosceles partner of x at radius (1-l)/l.
    double worst = 0.0;
    for (double lambda : {0.3, 0.5, 0.7}) {
      const Vec2 x = sphere_point(norm, s.angle());
      auto objective = [&](double t) {
        const Vec2 y = sphere_point(norm, t);
        return std::min(norm.gauge(lambda * x + (1.0 - lambda) * y), norm.gauge(lambda * x - (1.0 - lambda) * y));
      };
      const int n = 2048;
      double best = objective(0.0), best_t = 0.0;
      for (int k = 1; k < n; ++k) {
        const double t = std::numbers::pi * k / n;
        if (const double v = objective(t); v > best) best = v, best_t = t;
      }
      const double step = std::numbers::pi / n;
      const auto top = detail::golden_section_max(objective, best_t - step, best_t + step, 1e-13);
      const double r = (1.0 - lambda) / lambda;
      worst = std::max(worst, std::abs(iso_defect(norm, x, r * sphere_point(norm, top.argument))));
    }
    checks.add("beta_lambda.strictly_convex_converse", worst, 1e-6);
  }
}

void exact_checks(const NormModel& norm, const ReportOptions& options, const exact::RationalPolygon& poly,
                  CheckList& checks) {
  using exact::Rational;
  const Rational j = exact::exact_james(poly);
  checks.add("exact.james_matches_float", std::abs(j.get_d() - james(norm, options.sweep)), 1e-9);
  checks.add("exact.james_squared_at_least_two", j * j >= 2 ? 0.0 : 1.0, 0.0);
  checks.add("exact.james_at_most_two", j <= 2 ? 0.0 : 1.0, 0.0);

  double partner_gap = 0.0, exact_fail = 0.0;
  for (const auto& v : poly.half_vertices()) {
    const auto roots = exact::exact_partner_roots(poly, v);
    const auto y = exact::exact_iso_partner(poly, v);
    if (roots.size() != 2 || exact::exact_gauge(poly, y) != 1 ||
        exact::exact_gauge(poly, v + y) != exact::exact_gauge(poly, v - y)) {
      exact_fail += 1.0;
    }
    const Vec2 fy = iso_partner(norm, exact::to_float(v), 1.0, options.sweep.solver).primary;
    const Vec2 ey = exact::to_float(y);
    partner_gap = std::max({partner_gap, std::abs(fy.x - ey.x), std::abs(fy.y - ey.y)});
  }
  checks.add("exact.partners_exact", exact_fail, 0.0);
  checks.add("exact.partners_match_float", partner_gap, 1e-9);

  double defect = 0.0;
  for (const auto& p : exact::exact_james_attainment(poly)) defect = std::max(defect, std::abs(p.iso_defect.get_d()));
  checks.add("exact.attainment_isosceles", defect, 0.0);

  Sampler s(options.seed + 3);
  double gauge_gap = 0.0;
  for (int i = 0; i < options.random_samples; ++i) {
    const exact::RationalVec2 v{Rational(static_cast<long>(s.uniform(-40, 40)), 7),
                                Rational(static_cast<long>(s.uniform(-40, 40)), 11)};
    const double e = exact::exact_gauge(poly, v).get_d();
    const double f = norm.gauge(exact::to_float(v));
    gauge_gap = std::max(gauge_gap, e == 0.0 ? std::abs(f) : std::abs(e - f) / e);
  }
  checks.add("exact.gauge_matches_float", gauge_gap, 1e-12);
}

}  // namespace

std::vector<CheckResult> run_invariant_checks(const NormModel& norm, const ReportOptions& options,
                                              const exact::RationalPolygon* exact) {
  CheckList checks;
  gauge_checks(norm, options, checks);
  iso_checks(norm, options, checks);
  constant_checks(norm, options, checks);
  if (exact != nullptr) exact_checks(norm, options, *exact, checks);
  return checks.take();
}

ConstantsReport build_report(const NormModel& norm, const ReportOptions& options,
                             const exact::RationalPolygon* exact) {
  const SweepConfig& cfg = options.sweep;
  ConstantsReport report;
  report.james = james(norm, cfg);
  report.schaffer = schaffer(norm, cfg);
  for (double lambda : options.lambdas) report.james_generalized[lambda] = james_generalized(norm, lambda, cfg);
  for (double e : options.epsilons) {
    report.delta_curve.push_back({e, delta(norm, e, cfg)});
    report.rho_curve.push_back({e, rho(norm, e, cfg)});
    report.rho_prime_curve.push_back({e, rho_prime(norm, e, cfg)});
  }
  report.james_attainment = james_attainment(norm, options.attainment_tol, cfg);
  report.checks = run_invariant_checks(norm, options, exact);
  return report;
}

}  // namespace normplane
