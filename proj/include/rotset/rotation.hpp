#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rotset/convex.hpp"
#include "rotset/orbit.hpp"
#include "rotset/word.hpp"

namespace rotset {

/// Inner/outer bracket for a rotation set, with the estimation parameters
/// and the recorded distances between successive ladder hulls. The outer
/// margin is a heuristic error bar, not a rigorous enclosure.
struct RotationSetEstimate {
  ConvexRegion outer;
  ConvexRegion inner;
  std::vector<int> iterate_ladder;
  int grid_n = 0;
  std::vector<double> hausdorff_trace;
  double margin = 0.0;
};

/// Admissible (m/p, n/p) rectangle for the triple enumeration.
struct SlopeWindow {
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  bool empty_range() const { return x_lo > x_hi || y_lo > y_hi; }
};

struct ZActionProblem {
  ActionWord U, V, G;
  TorusLift F;
  Box K{{0.0, 0.0}, {1.0, 1.0}};
  int p_min = 1;
  int p_max = 64;
  SlopeWindow window;
  int hit_grid = 32;  // samples per box side for the hit test
  bool parallel = true;
};

/// A triple (m,n,p) for which U^-m V^-n G^p (K) met K.
struct TripleHit {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t p = 0;
  Vec2 quotient;  // (m/p, n/p)
};

struct ZActionResult {
  std::vector<TripleHit> hits;
  RotationSetEstimate estimate;  // from hits with p >= p_max/2; empty if none
  bool empty_hit_set = false;
  std::size_t deep_hits = 0;
  double pad_max = 0.0;  // largest hit-test padding among deep iterates
};

/// Classical estimator: hull(D(F^n))/n along the ladder; inner = last hull,
/// outer = inner inflated by trace tail + diam(D(F))/n_last.
RotationSetEstimate classical_rotation_set(const TorusLift& lift, const std::vector<int>& ladder,
                                           int grid_n, bool parallel = true);

/// Generalized estimator over a Z^3 action: enumerates (m,n,p) in the slope
/// window, records hits of the conservative intersection test, and brackets
/// the limit set by the deep-hit quotients.
ZActionResult zaction_rotation_set(const ZActionProblem& prob);

/// Conservative one-sided test for word(K) meeting K: hull of sampled images
/// (cell corners and centers) inflated by twice the largest in-cell
/// oscillation, measured as the center image's distance from the hull of its
/// corner images. Never reports false when the sampled images truly
/// intersect K. The cache must be a box_grid cache for K and is extended as
/// needed.
bool image_intersects(const ActionWord& w, const Box& k_box, OrbitCache& cache);

/// Same, for a pre-extended cache (read-only, safe to call concurrently).
bool image_intersects_prepared(const ActionWord& w, const Box& k_box, const OrbitCache& cache);

struct EstimatorParams {
  std::vector<int> ladder;
  int grid_n = 128;
  int p_min = 1;
  int p_max = 64;
  Box K{{0.0, 0.0}, {1.0, 1.0}};
  std::optional<SlopeWindow> window;  // nullopt: derived from the outer estimate
  int hit_grid = 32;
  bool parallel = true;
};

/// Ladder 1, 2, 4, ..., up to n_max.
std::vector<int> power_ladder(int n_max);

SlopeWindow default_window(const ConvexRegion& outer_estimate);

struct EquivalenceReport {
  double distance = 0.0;
  double combined_bound = 0.0;
  bool within = false;
  RotationSetEstimate classical_est;
  ZActionResult zaction;
};

/// Runs both estimators on the same lift with U=S, V=T, G=F and compares the
/// inner estimates against the combined resolution bound.
EquivalenceReport remark1_equivalence_check(const TorusLift& lift, const EstimatorParams& params);

}  // namespace rotset
