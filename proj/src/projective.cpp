#include "rotset/projective.hpp"

#include <cmath>

#include "rotset/errors.hpp"

namespace rotset {

Vec2 chart(const ProjPoint& p) {
  const double ax = std::fabs(p.h[0]);
  const double ay = std::fabs(p.h[1]);
  const double az = std::fabs(p.h[2]);
  const double scale = std::max(ax, std::max(ay, az));
  if (scale == 0.0) throw Error("projective point [0:0:0] is invalid");
  if (az < kChartTol * scale) {
    throw AtInfinityError("point lies on the line at infinity");
  }
  return {p.h[0] / p.h[2], p.h[1] / p.h[2]};
}

Vec2 apply_hat(const IntMatrix3& L, Vec2 v) {
  ProjPoint q;
  for (int r = 0; r < 3; ++r) {
    q.h[static_cast<std::size_t>(r)] = static_cast<double>(L.entry(r, 0)) * v.x +
                                       static_cast<double>(L.entry(r, 1)) * v.y +
                                       static_cast<double>(L.entry(r, 2));
  }
  return chart(q);
}

std::optional<PlanarLine> pullback_infinity_line(const IntMatrix3& L) {
  // L sends [x:y:1] into Delta_inf exactly when the third row annihilates it.
  const auto u = static_cast<double>(L.entry(2, 0));
  const auto v = static_cast<double>(L.entry(2, 1));
  const auto w = static_cast<double>(L.entry(2, 2));
  if (u == 0.0 && v == 0.0) return std::nullopt;  // pulled-back line is Delta_inf itself
  return PlanarLine{u, v, w};
}

double line_point_distance(const PlanarLine& line, Vec2 p) {
  return std::fabs(line_eval(line, p)) / std::hypot(line.u, line.v);
}

}  // namespace rotset
