#pragma once

#include <cstdint>
#include <vector>

#include "normplane/constants.hpp"
#include "normplane/exact.hpp"
#include "normplane/norm.hpp"

namespace normplane {

struct ReportOptions {
  SweepConfig sweep;
  std::vector<double> lambdas{0.2, 0.35, 0.5, 0.65, 0.8};
  // Epsilon grid of the delta, rho and rho' curves.
  std::vector<double> epsilons{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0,
                               1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9};
  double attainment_tol = 1e-9;
  int oracle_directions = 1024;
  int modulus_grid = 24;  // bracketing grid of james_from_delta / schaffer_from_rho
  int random_samples = 64;
  std::uint64_t seed = 20240607;
};

/// Runs every module invariant against one norm. When `exact` is given it
/// must describe the same polygon; the exact kernel is then cross-checked
/// against the float path.
std::vector<CheckResult> run_invariant_checks(const NormModel& norm, const ReportOptions& options,
                                              const exact::RationalPolygon* exact = nullptr);

/// Constants, curves, attainment pairs and the invariant checks for one norm.
ConstantsReport build_report(const NormModel& norm, const ReportOptions& options,
                             const exact::RationalPolygon* exact = nullptr);

}  // namespace normplane
