#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rotset/lift.hpp"
#include "rotset/vec2.hpp"
#include "rotset/word.hpp"

namespace rotset {

/// Axis-aligned box, the compact test set K of the hit tests.
struct Box {
  Vec2 lo;
  Vec2 hi;
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double diameter() const { return norm(hi - lo); }
  bool positive_area() const { return hi.x > lo.x && hi.y > lo.y; }
};

/// One forward or backward displacement step over a batch of points:
/// out[i] = prev[i] + delta(base[i] + prev[i])        (dir = +1)
/// out[i] = prev[i] + delta_inv(base[i] + prev[i])    (dir = -1)
/// The OpenMP version and the serial reference produce identical bits;
/// per-point work is independent.
void step_displacements(const TorusLift& lift, std::span<const Vec2> base,
                        std::span<const Vec2> prev, std::span<Vec2> out, int dir);
void step_displacements_serial(const TorusLift& lift, std::span<const Vec2> base,
                               std::span<const Vec2> prev, std::span<Vec2> out, int dir);

/// Per-iterate displacement tables Delta_k(z) = F^k(z) - z over a fixed batch
/// of seed points. Tables extend on demand in both directions (single
/// writer); already-computed tables may be read concurrently.
class OrbitCache {
 public:
  OrbitCache(TorusLift lift, std::vector<Vec2> seeds, bool parallel = true);

  /// Seeds at the cell centers ((i+1/2)/n, (j+1/2)/n) of [0,1)^2.
  static OrbitCache center_grid(const TorusLift& lift, int grid_n, bool parallel = true);

  /// Inclusive (per_side+1)^2 sample grid of a box, boundary included; the
  /// seeds are the fractional parts, displacement lookups stay valid by
  /// periodicity. samples() keeps the original points.
  static OrbitCache box_grid(const TorusLift& lift, const Box& k_box, int per_side,
                             bool parallel = true);

  /// Extend tables so that Delta_k is available (k of either sign).
  void ensure(std::int64_t k);

  std::span<const Vec2> displacements(std::int64_t k) const;
  bool has(std::int64_t k) const;

  const std::vector<Vec2>& seeds() const { return seeds_; }
  const std::vector<Vec2>& samples() const { return samples_; }
  const TorusLift& lift() const { return lift_; }

  int grid_n() const { return grid_n_; }
  int per_side() const { return per_side_; }
  const Box& box() const { return box_; }

 private:
  TorusLift lift_;
  std::vector<Vec2> seeds_;    // in [0,1)^2
  std::vector<Vec2> samples_;  // original sample points (== seeds_ unless box grid)
  std::vector<std::vector<Vec2>> fwd_;  // fwd_[k] = Delta_k, fwd_[0] all zero
  std::vector<std::vector<Vec2>> bwd_;  // bwd_[k] = Delta_{-k}
  bool parallel_ = true;
  int grid_n_ = 0;
  int per_side_ = 0;
  Box box_{};
};

/// word(z) = F^f(z) + (s, t). The cache is consulted when frac(z) coincides
/// with one of its seeds; otherwise the orbit is iterated directly.
Vec2 word_evaluate(const ActionWord& w, const TorusLift& lift, Vec2 z);
Vec2 word_evaluate(const ActionWord& w, const TorusLift& lift, Vec2 z, const OrbitCache& cache);

/// {F^k(z) - z : z in the grid_n x grid_n cell-center grid}. The cache, when
/// given, must have been built by center_grid(lift, grid_n).
std::vector<Vec2> displacement_samples(const TorusLift& lift, std::int64_t k, int grid_n,
                                       OrbitCache* cache = nullptr, bool parallel = true);

}  // namespace rotset
