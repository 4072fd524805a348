#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "normplane/error.hpp"
#include "normplane/vec2.hpp"

namespace normplane::detail {

// Validates a half list of polygon vertices and returns it in canonical form:
// one representative per antipodal pair, taken from the angle range [0, pi),
// sorted counterclockwise. The full cycle is the result followed by its
// negation. Only sign tests are used, so with an exact T the check is exact.
template <class T>
std::vector<BasicVec2<T>> canonical_half_cycle(std::vector<BasicVec2<T>> vertices) {
  if (vertices.size() < 2) {
    throw Error(ErrorCode::kTooFewVertices, "a symmetric polygon needs at least 2 half-vertices");
  }
  for (auto& v : vertices) {
    if (v.x == 0 && v.y == 0) throw Error(ErrorCode::kZeroVertex, "vertex at the origin");
    if (v.y < 0 || (v.y == 0 && v.x < 0)) v = -v;
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const BasicVec2<T>& a, const BasicVec2<T>& b) { return cross(a, b) > 0; });
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (cross(vertices[i], vertices[i + 1]) == 0) {
      throw Error(ErrorCode::kDuplicateDirection, "two vertices lie on the same ray through the origin");
    }
  }

  const std::size_t m = vertices.size();
  auto full = [&](std::size_t i) -> BasicVec2<T> {
    i %= 2 * m;
    return i < m ? vertices[i] : -vertices[i - m];
  };
  for (std::size_t i = 0; i < 2 * m; ++i) {
    const auto a = full(i), b = full(i + 1), c = full(i + 2);
    if (!(cross(b - a, c - b) > 0)) {
      throw Error(ErrorCode::kNonConvex, "vertex cycle is not strictly convex");
    }
  }
  return vertices;
}

template <class T>
std::vector<BasicVec2<T>> full_cycle_of(const std::vector<BasicVec2<T>>& half) {
  std::vector<BasicVec2<T>> full(half);
  for (const auto& v : half) full.push_back(-v);
  return full;
}

}  // namespace normplane::detail
