#pragma once

#include <span>
#include <vector>

#include "rotset/projective.hpp"
#include "rotset/vec2.hpp"

namespace rotset {

/// Filled convex region given by its hull vertices in CCW order, starting at
/// the lexicographically smallest vertex. Degenerate regions are a single
/// point (1 vertex) or a segment (2 vertices). Default-constructed regions
/// are empty; most operations reject them.
class ConvexRegion {
 public:
  ConvexRegion() = default;
  explicit ConvexRegion(std::vector<Vec2> hull_vertices) : v_(std::move(hull_vertices)) {}

  const std::vector<Vec2>& vertices() const { return v_; }
  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }

  double area() const;
  double diameter() const;
  double max_norm() const;  // max Euclidean norm over vertices

 private:
  std::vector<Vec2> v_;
};

/// Convex hull (monotone chain). Collinear points are dropped using a
/// cross-product threshold of 1e-12 * scale^2. Throws EmptyInputError.
ConvexRegion hull(std::span<const Vec2> points);
ConvexRegion hull(const std::vector<Vec2>& points);

/// Distance from a point to the filled region (0 inside).
double point_region_distance(Vec2 p, const ConvexRegion& a);

bool region_contains(const ConvexRegion& a, Vec2 p, double tol);

/// b subset of a, tested vertex-wise with slack tol.
bool region_contains_region(const ConvexRegion& a, const ConvexRegion& b, double tol);

/// Symmetric Hausdorff distance between filled convex regions. Exact for the
/// polygon data: the directed distance is attained at a vertex.
double hausdorff(const ConvexRegion& a, const ConvexRegion& b);

/// Outer polygonal approximation of a (+) B(0,r), guaranteed to contain the
/// true sum; the disk is a circumscribed 64-gon, overshoot <= r/100.
/// r = 0 returns a unchanged.
ConvexRegion inflate(const ConvexRegion& a, double r);

/// Minkowski sum of convex regions (hull of pairwise vertex sums).
ConvexRegion minkowski_sum(const ConvexRegion& a, const ConvexRegion& b);

ConvexRegion translate(const ConvexRegion& a, Vec2 t);
ConvexRegion scale_region(const ConvexRegion& a, double s);
inline ConvexRegion negate(const ConvexRegion& a) { return scale_region(a, -1.0); }

/// Minimum Euclidean distance from the region to the line; 0 iff they meet.
double line_region_distance(const PlanarLine& line, const ConvexRegion& a);

/// True iff the filled regions share a point (boundaries count).
bool regions_intersect(const ConvexRegion& a, const ConvexRegion& b);

/// Image of a convex region under the planar restriction of L. Requires the
/// region to be disjoint from the pulled-back infinity line of L; vertices
/// alone determine the image, edge midpoints are checked as a guard.
ConvexRegion apply_hat_region(const IntMatrix3& L, const ConvexRegion& a);

ConvexRegion box_region(Vec2 lo, Vec2 hi);

}  // namespace rotset
