#include "rotset/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rotset/errors.hpp"

namespace rotset {

namespace {

double cross3(Vec2 o, Vec2 a, Vec2 b) { return cross(a - o, b - o); }

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, a);
  double t = dot(p - a, d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * d);
}

int orient_sign(Vec2 o, Vec2 a, Vec2 b) {
  const double c = cross3(o, a, b);
  return (c > 0.0) - (c < 0.0);
}

bool on_segment(Vec2 p, Vec2 a, Vec2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int d1 = orient_sign(c, d, a);
  const int d2 = orient_sign(c, d, b);
  const int d3 = orient_sign(a, b, c);
  const int d4 = orient_sign(a, b, d);
  if (d1 != d2 && d3 != d4) return true;
  if (d1 == 0 && on_segment(a, c, d)) return true;
  if (d2 == 0 && on_segment(b, c, d)) return true;
  if (d3 == 0 && on_segment(c, a, b)) return true;
  if (d4 == 0 && on_segment(d, a, b)) return true;
  return false;
}

void require_nonempty(const ConvexRegion& r, const char* op) {
  if (r.empty()) throw EmptyInputError(std::string(op) + " on empty region");
}

}  // namespace

double ConvexRegion::area() const {
  if (v_.size() < 3) return 0.0;
  double a = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Vec2 p = v_[i];
    const Vec2 q = v_[(i + 1) % v_.size()];
    a += cross(p, q);
  }
  return 0.5 * a;
}

double ConvexRegion::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    for (std::size_t j = i + 1; j < v_.size(); ++j) {
      d = std::max(d, distance(v_[i], v_[j]));
    }
  }
  return d;
}

double ConvexRegion::max_norm() const {
  double d = 0.0;
  for (const Vec2& p : v_) d = std::max(d, norm(p));
  return d;
}

ConvexRegion hull(std::span<const Vec2> points) {
  if (points.empty()) throw EmptyInputError("hull of empty point set");

  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (pts.size() == 1) return ConvexRegion{std::move(pts)};

  double scale = 0.0;
  for (const Vec2& p : pts) scale = std::max(scale, norm_inf(p));
  const double tol = 1e-12 * scale * scale;

  const std::size_t n = pts.size();
  std::vector<Vec2> out(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross3(out[k - 2], out[k - 1], pts[i]) <= tol) --k;
    out[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross3(out[k - 2], out[k - 1], pts[i]) <= tol) --k;
    out[k++] = pts[i];
  }
  out.resize(k - 1);  // last point repeats the first
  return ConvexRegion{std::move(out)};
}

ConvexRegion hull(const std::vector<Vec2>& points) {
  return hull(std::span<const Vec2>(points.data(), points.size()));
}

bool region_contains(const ConvexRegion& a, Vec2 p, double tol) {
  require_nonempty(a, "containment test");
  const auto& v = a.vertices();
  if (v.size() == 1) return distance(p, v[0]) <= tol;
  if (v.size() == 2) return point_segment_distance(p, v[0], v[1]) <= tol;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 e0 = v[i];
    const Vec2 e1 = v[(i + 1) % v.size()];
    const double len = distance(e0, e1);
    if (len == 0.0) continue;
    if (cross3(e0, e1, p) < -tol * len) return false;  // right of a CCW edge
  }
  return true;
}

bool region_contains_region(const ConvexRegion& a, const ConvexRegion& b, double tol) {
  require_nonempty(b, "containment test");
  for (const Vec2& p : b.vertices()) {
    if (!region_contains(a, p, tol)) return false;
  }
  return true;
}

double point_region_distance(Vec2 p, const ConvexRegion& a) {
  require_nonempty(a, "point distance");
  const auto& v = a.vertices();
  if (v.size() == 1) return distance(p, v[0]);
  if (v.size() == 2) return point_segment_distance(p, v[0], v[1]);
  if (region_contains(a, p, 0.0)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    d = std::min(d, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
  }
  return d;
}

double hausdorff(const ConvexRegion& a, const ConvexRegion& b) {
  require_nonempty(a, "hausdorff");
  require_nonempty(b, "hausdorff");
  // For filled convex sets the directed distance is attained at a vertex.
  double d = 0.0;
  for (const Vec2& p : a.vertices()) d = std::max(d, point_region_distance(p, b));
  for (const Vec2& p : b.vertices()) d = std::max(d, point_region_distance(p, a));
  return d;
}

ConvexRegion minkowski_sum(const ConvexRegion& a, const ConvexRegion& b) {
  require_nonempty(a, "minkowski sum");
  require_nonempty(b, "minkowski sum");
  std::vector<Vec2> sums;
  sums.reserve(a.size() * b.size());
  for (const Vec2& p : a.vertices()) {
    for (const Vec2& q : b.vertices()) sums.push_back(p + q);
  }
  return hull(sums);
}

ConvexRegion inflate(const ConvexRegion& a, double r) {
  require_nonempty(a, "inflate");
  if (r < 0.0) throw Error("inflate radius must be >= 0");
  if (r == 0.0) return a;
  constexpr int kArcs = 64;
  // Circumscribed regular polygon: contains the disk, overshoot r*(sec(pi/m)-1).
  const double rad = r / std::cos(M_PI / kArcs);
  std::vector<Vec2> disk;
  disk.reserve(kArcs);
  for (int i = 0; i < kArcs; ++i) {
    const double ang = 2.0 * M_PI * i / kArcs;
    disk.emplace_back(rad * std::cos(ang), rad * std::sin(ang));
  }
  return minkowski_sum(a, ConvexRegion{std::move(disk)});
}

ConvexRegion translate(const ConvexRegion& a, Vec2 t) {
  require_nonempty(a, "translate");
  std::vector<Vec2> v;
  v.reserve(a.size());
  for (const Vec2& p : a.vertices()) v.push_back(p + t);
  return ConvexRegion{std::move(v)};  // order and orientation preserved
}

ConvexRegion scale_region(const ConvexRegion& a, double s) {
  require_nonempty(a, "scale");
  std::vector<Vec2> v;
  v.reserve(a.size());
  for (const Vec2& p : a.vertices()) v.push_back(p * s);
  return hull(v);  // rebuild: s <= 0 flips orientation or collapses
}

double line_region_distance(const PlanarLine& line, const ConvexRegion& a) {
  require_nonempty(a, "line distance");
  const double nrm = std::hypot(line.u, line.v);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const Vec2& p : a.vertices()) {
    const double s = line_eval(line, p);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (lo <= 0.0 && hi >= 0.0) return 0.0;  // vertices straddle or touch the line
  return std::min(std::fabs(lo), std::fabs(hi)) / nrm;
}

bool regions_intersect(const ConvexRegion& a, const ConvexRegion& b) {
  require_nonempty(a, "intersection test");
  require_nonempty(b, "intersection test");
  for (const Vec2& p : a.vertices()) {
    if (region_contains(b, p, 0.0)) return true;
  }
  for (const Vec2& p : b.vertices()) {
    if (region_contains(a, p, 0.0)) return true;
  }
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  if (va.size() < 2 || vb.size() < 2) return false;
  for (std::size_t i = 0; i < va.size(); ++i) {
    const Vec2 a0 = va[i];
    const Vec2 a1 = va[(i + 1) % va.size()];
    for (std::size_t j = 0; j < vb.size(); ++j) {
      if (segments_intersect(a0, a1, vb[j], vb[(j + 1) % vb.size()])) return true;
    }
  }
  return false;
}

ConvexRegion apply_hat_region(const IntMatrix3& L, const ConvexRegion& a) {
  require_nonempty(a, "projective image");
  if (const auto line = pullback_infinity_line(L)) {
    if (line_region_distance(*line, a) <= 0.0) {
      throw RegionMeetsInfinityLineError("region meets the pulled-back infinity line");
    }
  }
  std::vector<Vec2> images;
  images.reserve(a.size());
  for (const Vec2& p : a.vertices()) images.push_back(apply_hat(L, p));
  ConvexRegion out = hull(images);

  // Convexity guard: edge midpoints must land inside the vertex-image hull.
  const auto& v = a.vertices();
  if (v.size() >= 2) {
    double scale = std::max(1.0, out.max_norm());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2 mid = (v[i] + v[(i + 1) % v.size()]) * 0.5;
      if (!region_contains(out, apply_hat(L, mid), 1e-9 * scale)) {
        throw Error("projective image convexity guard failed");
      }
    }
  }
  return out;
}

ConvexRegion box_region(Vec2 lo, Vec2 hi) {
  return hull(std::vector<Vec2>{{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}});
}

}  // namespace rotset
