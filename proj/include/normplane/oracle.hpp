#pragma once

#include "normplane/norm.hpp"

// Brute-force ground truth evaluated literally from the definitions on a
// uniform grid of direction angles. Nothing here calls the solvers of the
// iso or constants modules; only the gauge and sphere parametrization are
// shared.
namespace normplane::oracle {

struct GridSpec {
  int n_directions = 4096;
  // Number of times the local search window shrinks by a factor of 8.
  int refine_rounds = 4;
  // Local refinement stops once its window is narrower than this (radians).
  double tolerance = 1e-12;
};

void validate(const GridSpec& grid);

/// max over grid pairs of min{|x+y|, |x-y|}, then local refinement.
double oracle_james(const NormModel& norm, const GridSpec& grid);

/// min over grid pairs of max{|x+y|, |x-y|}, then local refinement.
double oracle_schaffer(const NormModel& norm, const GridSpec& grid);

/// min of 1 - |x+y|/2 over grid pairs with |x - y| >= eps.
double oracle_delta(const NormModel& norm, double eps, const GridSpec& grid);

/// max of 1 - |x+y|/2 over grid pairs with |x - y| <= eps.
double oracle_rho(const NormModel& norm, double eps, const GridSpec& grid);

/// Sphere point y with cross(x, y) > 0 minimizing | |x+y| - |x-y| |.
Vec2 oracle_partner(const NormModel& norm, const Vec2& x, const GridSpec& grid);

}  // namespace normplane::oracle
