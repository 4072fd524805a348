#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normplane/iso.hpp"
#include "normplane/norm.hpp"

namespace normplane {

/// Grid sizes and tolerances of the sphere sweeps.
///
/// Smooth norms are sampled uniformly in direction angle; polyhedral norms
/// are sampled edge by edge (vertices included), which keeps kinks of the
/// swept functions on the grid. Every sweep refines the best cell with a
/// golden-section search.
struct SweepConfig {
  int directions = 4096;
  int edge_samples = 64;
  int rho_prime_grid = 256;  // per axis
  double refine_tol = 1e-12;
  SolverConfig solver;
};

struct AttainmentPair {
  Vec2 x;
  Vec2 y;
  double value = 0.0;
  double iso_defect = 0.0;
  // eps0 = |1 + d^2 - 2d - eps^2/4| for pairs attaining the modulus of convexity d.
  std::optional<double> approx_epsilon;
  // The attainment theorem's conclusion holds for this pair.
  bool verified = false;
};

struct CurvePoint {
  double epsilon = 0.0;
  double value = 0.0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct ConstantsReport {
  double james = 0.0;
  double schaffer = 0.0;
  std::map<double, double> james_generalized;
  std::vector<CurvePoint> delta_curve;
  std::vector<CurvePoint> rho_curve;
  std::vector<CurvePoint> rho_prime_curve;
  std::vector<AttainmentPair> james_attainment;
  std::vector<CheckResult> checks;
};

/// Local James constant: |x + y| for the unit isosceles partner y of x.
double beta(const NormModel& norm, const Vec2& x, const SolverConfig& config = {});

/// Local Schaffer constant; equal to beta in the plane.
double alpha(const NormModel& norm, const Vec2& x, const SolverConfig& config = {});

/// Generalized local James constant |lambda x + (1 - lambda) y|, where y is a
/// unit vector with x isosceles orthogonal to ((1 - lambda)/lambda) y.
double beta_lambda(const NormModel& norm, const Vec2& x, double lambda, const SolverConfig& config = {});

/// James constant. Polyhedral norms: maximum of beta over the vertices.
/// Otherwise: refined sweep of beta over a half sphere.
double james(const NormModel& norm, const SweepConfig& config = {});

double james_generalized(const NormModel& norm, double lambda, const SweepConfig& config = {});

/// Schaffer constant, the minimum of alpha over the sphere.
double schaffer(const NormModel& norm, const SweepConfig& config = {});

/// Modulus of convexity for eps in [0, 2).
double delta(const NormModel& norm, double eps, const SweepConfig& config = {});

/// sup{1 - |x+y|/2 : |x - y| <= eps} for eps in [0, 2].
double rho(const NormModel& norm, double eps, const SweepConfig& config = {});

/// sup{(|x + eps y| + |x - eps y|)/2 - 1} over unit x, y; eps >= 0.
double rho_prime(const NormModel& norm, double eps, const SweepConfig& config = {});

std::vector<AttainmentPair> james_attainment(const NormModel& norm, double tol, const SweepConfig& config = {});

/// Pairs (u, v) with |u - v| = eps attaining delta(eps) within tol, each
/// annotated with eps0.
std::vector<AttainmentPair> delta_attainment(const NormModel& norm, double eps, double tol,
                                             const SweepConfig& config = {});

/// sup{eps : eps < 2 - 2 delta(eps)}, bracketed on `grid` points of
/// [sqrt(2) - 0.01, 2] and then bisected.
double james_from_delta(const NormModel& norm, int grid, const SweepConfig& config = {});

/// inf{eps : eps > 2 - 2 rho(eps)}, bracketed on `grid` points of
/// [0.99, sqrt(2) + 0.01] and then bisected.
double schaffer_from_rho(const NormModel& norm, int grid, const SweepConfig& config = {});

}  // namespace normplane
