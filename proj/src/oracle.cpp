#include "normplane/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "normplane/error.hpp"

namespace normplane::oracle {

namespace {

constexpr int kRefineHalfWidth = 8;
constexpr int kMaxRefineMoves = 256;

std::vector<Vec2> grid_points(const NormModel& norm, int n, int count) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) pts.push_back(sphere_point(norm, kTwoPi * k / n));
  return pts;
}

// Maximizes f over pairs of grid directions (x from the half sphere, y from
// the half sphere), then zooms in on the best pair.
template <class F>
double pair_search_max(const NormModel& norm, const GridSpec& grid, F&& f) {
  validate(grid);
  const int n = grid.n_directions;
  const int half = (n + 1) / 2;
  const auto pts = grid_points(norm, n, half);
  double best = -INFINITY;
  int bi = 0, bj = 0;
  for (int i = 0; i < half; ++i) {
    for (int j = 0; j < half; ++j) {
      const double v = f(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
      if (v > best) best = v, bi = i, bj = j;
    }
  }

  // Pattern search: recenter at the same scale while the best point moves,
  // shrink once it stays put. The walk lets the zoom follow a ridge whose
  // peak lies several coarse cells away from the coarse argmax.
  double tx = kTwoPi * bi / n, ty = kTwoPi * bj / n;
  double step = kTwoPi / n / kRefineHalfWidth;
  int shrinks = 0;
  for (int moves = 0; shrinks < grid.refine_rounds && step * kRefineHalfWidth > grid.tolerance &&
                      moves < kMaxRefineMoves;
       ++moves) {
    double nx = tx, ny = ty;
    for (int a = -kRefineHalfWidth; a <= kRefineHalfWidth; ++a) {
      const Vec2 x = sphere_point(norm, tx + a * step);
      for (int b = -kRefineHalfWidth; b <= kRefineHalfWidth; ++b) {
        const double v = f(x, sphere_point(norm, ty + b * step));
        if (v > best) best = v, nx = tx + a * step, ny = ty + b * step;
      }
    }
    if (nx == tx && ny == ty) {
      step /= kRefineHalfWidth;
      ++shrinks;
    }
    tx = nx, ty = ny;
  }
  return best;
}

template <class Keep, class F>
double constrained_search(const NormModel& norm, const GridSpec& grid, Keep&& keep, F&& f, bool maximize) {
  validate(grid);
  const int n = grid.n_directions;
  const auto pts = grid_points(norm, n, n);
  const int half = (n + 1) / 2;
  double best = maximize ? -INFINITY : INFINITY;
  for (int i = 0; i < half; ++i) {
    const Vec2& x = pts[static_cast<std::size_t>(i)];
    for (const Vec2& y : pts) {
      if (!keep(x, y)) continue;
      const double v = f(x, y);
      best = maximize ? std::max(best, v) : std::min(best, v);
    }
  }
  return best;
}

}  // namespace

void validate(const GridSpec& grid) {
  if (grid.n_directions < 8) throw Error(ErrorCode::kInvalidGrid, "n_directions must be >= 8");
  if (grid.refine_rounds < 0) throw Error(ErrorCode::kInvalidGrid, "refine_rounds must be >= 0");
  if (!(grid.tolerance > 0.0)) throw Error(ErrorCode::kInvalidTolerance, "tolerance must be positive");
}

double oracle_james(const NormModel& norm, const GridSpec& grid) {
  return pair_search_max(norm, grid, [&](const Vec2& x, const Vec2& y) {
    return std::min(norm.gauge(x + y), norm.gauge(x - y));
  });
}

double oracle_schaffer(const NormModel& norm, const GridSpec& grid) {
  return -pair_search_max(norm, grid, [&](const Vec2& x, const Vec2& y) {
    return -std::max(norm.gauge(x + y), norm.gauge(x - y));
  });
}

double oracle_delta(const NormModel& norm, double eps, const GridSpec& grid) {
  const double v = constrained_search(
      norm, grid, [&](const Vec2& x, const Vec2& y) { return norm.gauge(x - y) >= eps; },
      [&](const Vec2& x, const Vec2& y) { return 1.0 - 0.5 * norm.gauge(x + y); }, false);
  return std::max(v, 0.0);
}

double oracle_rho(const NormModel& norm, double eps, const GridSpec& grid) {
  const double v = constrained_search(
      norm, grid, [&](const Vec2& x, const Vec2& y) { return norm.gauge(x - y) <= eps; },
      [&](const Vec2& x, const Vec2& y) { return 1.0 - 0.5 * norm.gauge(x + y); }, true);
  return std::max(v, 0.0);
}

Vec2 oracle_partner(const NormModel& norm, const Vec2& x, const GridSpec& grid) {
  validate(grid);
  if (x.x == 0.0 && x.y == 0.0) throw Error(ErrorCode::kZeroVector, "x must be nonzero");
  auto badness = [&](double t) {
    const Vec2 y = sphere_point(norm, t);
    return std::abs(norm.gauge(x + y) - norm.gauge(x - y));
  };
  const double start = std::atan2(x.y, x.x);
  const int n = grid.n_directions;
  const int half = n / 2;
  double best_t = start + std::numbers::pi / 2;
  double best = badness(best_t);
  // Open half sphere strictly counterclockwise of x.
  for (int k = 1; k < half; ++k) {
    const double t = start + kTwoPi * k / n;
    if (const double b = badness(t); b < best) best = b, best_t = t;
  }
  double window = kTwoPi / n;
  for (int round = 0; round < std::max(grid.refine_rounds, 1) * 4 && window > grid.tolerance; ++round) {
    const double step = window / kRefineHalfWidth;
    double next = best_t;
    for (int a = -kRefineHalfWidth; a <= kRefineHalfWidth; ++a) {
      const double t = best_t + a * step;
      if (const double b = badness(t); b < best) best = b, next = t;
    }
    best_t = next;
    window = step;
  }
  return sphere_point(norm, best_t);
}

}  // namespace normplane::oracle
