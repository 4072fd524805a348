#pragma once

#include <cmath>

namespace normplane {

// Plane vector over an ordered field. Instantiated with double for the
// numerical paths and with GMP rationals in the exact kernel.
template <class T>
struct BasicVec2 {
  T x{};
  T y{};

  friend bool operator==(const BasicVec2&, const BasicVec2&) = default;
};

template <class T>
BasicVec2<T> operator+(const BasicVec2<T>& a, const BasicVec2<T>& b) {
  return {T(a.x + b.x), T(a.y + b.y)};
}

template <class T>
BasicVec2<T> operator-(const BasicVec2<T>& a, const BasicVec2<T>& b) {
  return {T(a.x - b.x), T(a.y - b.y)};
}

template <class T>
BasicVec2<T> operator-(const BasicVec2<T>& a) {
  return {T(-a.x), T(-a.y)};
}

template <class T>
BasicVec2<T> operator*(const T& s, const BasicVec2<T>& a) {
  return {T(s * a.x), T(s * a.y)};
}

template <class T>
BasicVec2<T> operator*(const BasicVec2<T>& a, const T& s) {
  return s * a;
}

template <class T>
BasicVec2<T> operator/(const BasicVec2<T>& a, const T& s) {
  return {T(a.x / s), T(a.y / s)};
}

// x1*y2 - x2*y1; positive iff `a` precedes `b`.
template <class T>
T cross(const BasicVec2<T>& a, const BasicVec2<T>& b) {
  return T(a.x * b.y - a.y * b.x);
}

template <class T>
T dot(const BasicVec2<T>& a, const BasicVec2<T>& b) {
  return T(a.x * b.x + a.y * b.y);
}

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

using Vec2 = BasicVec2<double>;

inline bool is_finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

inline double euclidean_length(const Vec2& v) { return std::hypot(v.x, v.y); }

}  // namespace normplane
