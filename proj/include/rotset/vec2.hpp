#pragma once

#include <algorithm>
#include <cmath>

namespace rotset {

/// Planar vector; used both for points of the plane and for rotation
/// vectors (units: cells per iterate).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double px, double py) : x(px), y(py) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double norm_inf(Vec2 v) { return std::max(std::fabs(v.x), std::fabs(v.y)); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Reduce to the fundamental domain [0,1)^2.
inline Vec2 frac_unit(Vec2 v) {
  double fx = v.x - std::floor(v.x);
  double fy = v.y - std::floor(v.y);
  if (fx >= 1.0) fx = 0.0;  // floor rounding at the seam
  if (fy >= 1.0) fy = 0.0;
  return {fx, fy};
}

}  // namespace rotset
