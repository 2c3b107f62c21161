#pragma once

#include <array>
#include <optional>

#include "rotset/matrix.hpp"
#include "rotset/vec2.hpp"

namespace rotset {

/// Homogeneous coordinates [x:y:z]; equality up to nonzero scaling.
struct ProjPoint {
  std::array<double, 3> h{0.0, 0.0, 1.0};
};

/// Planar line {(x,y) : u*x + v*y + w = 0}, (u,v) != (0,0).
struct PlanarLine {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

/// A point charts as at-infinity when |z| < kChartTol * max|coord|.
inline constexpr double kChartTol = 1e-9;

inline ProjPoint embed(Vec2 v) { return ProjPoint{{v.x, v.y, 1.0}}; }

/// The affine chart [x:y:z] -> (x/z, y/z). Throws AtInfinityError near z = 0.
Vec2 chart(const ProjPoint& p);

/// Planar restriction of L: v -> chart(L * [v.x : v.y : 1]).
Vec2 apply_hat(const IntMatrix3& L, Vec2 v);

/// Planar points that L sends to the line at infinity: third row of L read as
/// line coefficients. nullopt means the pulled-back line has no planar part
/// (third row (0,0,c)), so any disjointness hypothesis is vacuous.
std::optional<PlanarLine> pullback_infinity_line(const IntMatrix3& L);

double line_point_distance(const PlanarLine& line, Vec2 p);

/// Signed evaluation u*x + v*y + w (not normalized).
inline double line_eval(const PlanarLine& line, Vec2 p) {
  return line.u * p.x + line.v * p.y + line.w;
}

}  // namespace rotset
