#include "rotset/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>

#include "rotset/errors.hpp"

namespace rotset {

namespace {

ConvexRegion scaled_hull(std::span<const Vec2> displacements, double inv_k) {
  std::vector<Vec2> scaled;
  scaled.reserve(displacements.size());
  for (const Vec2& d : displacements) scaled.emplace_back(d.x * inv_k, d.y * inv_k);
  return hull(scaled);
}

/// Hull of word-image samples for the pure-iterate part F^f over a box-grid
/// cache (cell corners and centers), plus the hit-test padding: twice the
/// largest distance from a cell-center image to the hull of its corner
/// images. The padding measures the local oscillation beyond piecewise-linear
/// behavior; it is identically zero for affine images such as translations.
struct ImageHull {
  ConvexRegion region;
  double pad = 0.0;
};

ImageHull image_hull_for_iterate(std::int64_t f, const OrbitCache& cache) {
  const auto& samples = cache.samples();
  const auto delta = cache.displacements(f);
  std::vector<Vec2> images(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) images[i] = samples[i] + delta[i];

  const int g = cache.per_side();
  const std::size_t corners =
      static_cast<std::size_t>(g + 1) * static_cast<std::size_t>(g + 1);
  const auto corner = [&](int i, int j) -> const Vec2& {
    return images[static_cast<std::size_t>(j) * (g + 1) + static_cast<std::size_t>(i)];
  };
  const auto center = [&](int i, int j) -> const Vec2& {
    return images[corners + static_cast<std::size_t>(j) * g + static_cast<std::size_t>(i)];
  };
  double oscillation = 0.0;
  std::vector<Vec2> cell(4);
  for (int j = 0; j < g; ++j) {
    for (int i = 0; i < g; ++i) {
      cell[0] = corner(i, j);
      cell[1] = corner(i + 1, j);
      cell[2] = corner(i, j + 1);
      cell[3] = corner(i + 1, j + 1);
      oscillation = std::max(oscillation, point_region_distance(center(i, j), hull(cell)));
    }
  }
  return {hull(images), 2.0 * oscillation};
}

}  // namespace

std::vector<int> power_ladder(int n_max) {
  std::vector<int> ladder;
  for (int n = 1; n <= n_max; n *= 2) ladder.push_back(n);
  return ladder;
}

RotationSetEstimate classical_rotation_set(const TorusLift& lift, const std::vector<int>& ladder,
                                           int grid_n, bool parallel) {
  if (ladder.empty()) throw Error("ladder must be non-empty");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 1 || (i > 0 && ladder[i] <= ladder[i - 1])) {
      throw Error("ladder must be strictly increasing with entries >= 1");
    }
  }

  OrbitCache cache = OrbitCache::center_grid(lift, grid_n, parallel);
  cache.ensure(ladder.back());

  RotationSetEstimate est;
  est.iterate_ladder = ladder;
  est.grid_n = grid_n;

  ConvexRegion prev;
  for (const int n : ladder) {
    ConvexRegion h = scaled_hull(cache.displacements(n), 1.0 / n);
    if (!prev.empty()) est.hausdorff_trace.push_back(hausdorff(prev, h));
    prev = std::move(h);
  }
  est.inner = std::move(prev);

  const double step_diam = hull(std::vector<Vec2>(cache.displacements(1).begin(),
                                                  cache.displacements(1).end()))
                               .diameter();
  const double trace_tail = est.hausdorff_trace.empty() ? 0.0 : est.hausdorff_trace.back();
  est.margin = trace_tail + step_diam / ladder.back();
  est.outer = inflate(est.inner, est.margin);
  return est;
}

bool image_intersects_prepared(const ActionWord& w, const Box& k_box, const OrbitCache& cache) {
  const ImageHull ih = image_hull_for_iterate(w.f, cache);
  const ConvexRegion moved =
      translate(inflate(ih.region, ih.pad),
                Vec2{static_cast<double>(w.s), static_cast<double>(w.t)});
  return regions_intersect(moved, box_region(k_box.lo, k_box.hi));
}

bool image_intersects(const ActionWord& w, const Box& k_box, OrbitCache& cache) {
  if (cache.per_side() == 0) throw Error("image_intersects needs a box-grid cache");
  if (!(cache.box().lo == k_box.lo && cache.box().hi == k_box.hi)) {
    throw Error("cache was built for a different box");
  }
  cache.ensure(w.f);
  return image_intersects_prepared(w, k_box, cache);
}

SlopeWindow default_window(const ConvexRegion& outer_estimate) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const Vec2& p : outer_estimate.vertices()) {
    x_lo = std::min(x_lo, p.x);
    x_hi = std::max(x_hi, p.x);
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  return {x_lo - 0.5, x_hi + 0.5, y_lo - 0.5, y_hi + 0.5};
}

ZActionResult zaction_rotation_set(const ZActionProblem& prob) {
  if (prob.p_min < 1 || prob.p_max < prob.p_min) throw Error("need 1 <= p_min <= p_max");
  if (!prob.K.positive_area()) throw Error("K must have positive area");

  ZActionResult result;
  if (prob.window.empty_range()) {
    result.empty_hit_set = true;
    return result;
  }

  // Integer (m, n) ranges per p from the slope window.
  struct PerP {
    std::int64_t m_lo, m_hi, n_lo, n_hi;
  };
  const auto bound_lo = [](double w, int p) {
    return static_cast<std::int64_t>(std::ceil(w * p - 1e-12));
  };
  const auto bound_hi = [](double w, int p) {
    return static_cast<std::int64_t>(std::floor(w * p + 1e-12));
  };
  std::vector<PerP> plan(static_cast<std::size_t>(prob.p_max - prob.p_min + 1));
  std::int64_t f_lo = 0, f_hi = 0;
  bool any_range = false;
  for (int p = prob.p_min; p <= prob.p_max; ++p) {
    PerP& pp = plan[static_cast<std::size_t>(p - prob.p_min)];
    pp.m_lo = bound_lo(prob.window.x_lo, p);
    pp.m_hi = bound_hi(prob.window.x_hi, p);
    pp.n_lo = bound_lo(prob.window.y_lo, p);
    pp.n_hi = bound_hi(prob.window.y_hi, p);
    if (pp.m_lo > pp.m_hi || pp.n_lo > pp.n_hi) continue;
    // f-exponent of U^-m V^-n G^p is linear in (m, n); extremes at corners.
    for (const std::int64_t m : {pp.m_lo, pp.m_hi}) {
      for (const std::int64_t n : {pp.n_lo, pp.n_hi}) {
        const std::int64_t f = checked_add(
            checked_sub(checked_mul(-m, prob.U.f), checked_mul(n, prob.V.f)),
            checked_mul(p, prob.G.f));
        f_lo = any_range ? std::min(f_lo, f) : f;
        f_hi = any_range ? std::max(f_hi, f) : f;
        any_range = true;
      }
    }
  }
  if (!any_range) {
    result.empty_hit_set = true;
    return result;
  }

  OrbitCache cache = OrbitCache::box_grid(prob.F, prob.K, prob.hit_grid, prob.parallel);
  cache.ensure(f_lo);
  cache.ensure(f_hi);

  // Hit polygons per iterate exponent: (s,t) is a hit for f exactly when
  // (s,t) lies in K (+) -(padded image hull of F^f over K).
  const std::int64_t f_count = f_hi - f_lo + 1;
  std::vector<ConvexRegion> hit_poly(static_cast<std::size_t>(f_count));
  std::vector<double> pads(static_cast<std::size_t>(f_count), 0.0);
  const ConvexRegion k_region = box_region(prob.K.lo, prob.K.hi);
  {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic) if (prob.parallel)
    for (std::int64_t idx = 0; idx < f_count; ++idx) {
      try {
        const ImageHull ih = image_hull_for_iterate(f_lo + idx, cache);
        hit_poly[static_cast<std::size_t>(idx)] =
            minkowski_sum(k_region, negate(inflate(ih.region, ih.pad)));
        pads[static_cast<std::size_t>(idx)] = ih.pad;
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  }

  // Enumerate triples; each p is independent.
  std::vector<std::vector<TripleHit>> per_p(plan.size());
  {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic) if (prob.parallel)
    for (int p = prob.p_min; p <= prob.p_max; ++p) {
      try {
        const PerP& pp = plan[static_cast<std::size_t>(p - prob.p_min)];
        auto& hits = per_p[static_cast<std::size_t>(p - prob.p_min)];
        for (std::int64_t m = pp.m_lo; m <= pp.m_hi; ++m) {
          for (std::int64_t n = pp.n_lo; n <= pp.n_hi; ++n) {
            // Canonical exponents of U^-m V^-n G^p.
            const std::int64_t s =
                -m * prob.U.s - n * prob.V.s + static_cast<std::int64_t>(p) * prob.G.s;
            const std::int64_t t =
                -m * prob.U.t - n * prob.V.t + static_cast<std::int64_t>(p) * prob.G.t;
            const std::int64_t f =
                -m * prob.U.f - n * prob.V.f + static_cast<std::int64_t>(p) * prob.G.f;
            const ConvexRegion& poly = hit_poly[static_cast<std::size_t>(f - f_lo)];
            if (region_contains(poly, {static_cast<double>(s), static_cast<double>(t)}, 0.0)) {
              hits.push_back({m, n, p,
                              {static_cast<double>(m) / p, static_cast<double>(n) / p}});
            }
          }
        }
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  }

  for (auto& hits : per_p) {
    result.hits.insert(result.hits.end(), hits.begin(), hits.end());
  }
  result.empty_hit_set = result.hits.empty();

  // Inner bracket from deep hits only; shallow hits carry transients.
  const double p_deep = prob.p_max / 2.0;
  std::vector<Vec2> deep_quotients;
  double pad_max = 0.0;
  for (const TripleHit& h : result.hits) {
    if (static_cast<double>(h.p) >= p_deep) {
      deep_quotients.push_back(h.quotient);
      const std::int64_t f =
          -h.m * prob.U.f - h.n * prob.V.f + h.p * prob.G.f;
      pad_max = std::max(pad_max, pads[static_cast<std::size_t>(f - f_lo)]);
    }
  }
  result.deep_hits = deep_quotients.size();
  result.pad_max = pad_max;

  if (!deep_quotients.empty()) {
    result.estimate.inner = hull(deep_quotients);
    result.estimate.margin = (2.0 * prob.K.diameter() + pad_max) / p_deep;
    result.estimate.outer = inflate(result.estimate.inner, result.estimate.margin);
    result.estimate.iterate_ladder = {prob.p_min, prob.p_max};
    result.estimate.grid_n = prob.hit_grid;
  }
  return result;
}

EquivalenceReport remark1_equivalence_check(const TorusLift& lift, const EstimatorParams& params) {
  EquivalenceReport rep;
  rep.classical_est = classical_rotation_set(lift, params.ladder, params.grid_n, params.parallel);

  ZActionProblem prob;
  prob.U = word_s();
  prob.V = word_t();
  prob.G = word_f();
  prob.F = lift;
  prob.K = params.K;
  prob.p_min = params.p_min;
  prob.p_max = params.p_max;
  prob.window = params.window ? *params.window : default_window(rep.classical_est.outer);
  prob.hit_grid = params.hit_grid;
  prob.parallel = params.parallel;
  rep.zaction = zaction_rotation_set(prob);

  if (!rep.zaction.estimate.inner.empty()) {
    rep.distance = hausdorff(rep.classical_est.inner, rep.zaction.estimate.inner);
    rep.combined_bound = rep.classical_est.margin + rep.zaction.estimate.margin;
    rep.within = rep.distance <= rep.combined_bound;
  }
  return rep;
}

}  // namespace rotset
