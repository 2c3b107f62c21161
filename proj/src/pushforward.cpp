#include "rotset/pushforward.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>

#include "rotset/errors.hpp"

namespace rotset {

PushforwardSystem build_pushforward(const TorusLift& lift, const IntMatrix3& L) {
  PushforwardSystem sys;
  sys.L = L;
  sys.L_inv = L.inverse_unimodular();  // throws NotUnimodular unless det = 1
  // Columns of L_inv are (a_i, b_i, c_i); the words are
  // U = S^a1 T^b1 F^-c1, V = S^a2 T^b2 F^-c2, G = S^-a3 T^-b3 F^c3.
  sys.U = {sys.L_inv.entry(0, 0), sys.L_inv.entry(1, 0), checked_sub(0, sys.L_inv.entry(2, 0))};
  sys.V = {sys.L_inv.entry(0, 1), sys.L_inv.entry(1, 1), checked_sub(0, sys.L_inv.entry(2, 1))};
  sys.G = {checked_sub(0, sys.L_inv.entry(0, 2)), checked_sub(0, sys.L_inv.entry(1, 2)),
           sys.L_inv.entry(2, 2)};
  sys.F = lift;
  return sys;
}

double check_hypothesis(const PushforwardSystem& sys, const RotationSetEstimate& rho) {
  const auto line = pullback_infinity_line(sys.L);
  if (!line) return std::numeric_limits<double>::infinity();
  return line_region_distance(*line, rho.outer);
}

std::pair<ActionWord, ActionWord> word_correspondence(const PushforwardSystem& sys,
                                                      const IntTriple& mnp) {
  const IntTriple img = matrix_apply(sys.L, mnp);
  const ActionWord lhs{checked_sub(0, mnp[0]), checked_sub(0, mnp[1]), mnp[2]};
  const ActionWord rhs = word_compose(
      word_compose(word_pow(sys.U, checked_sub(0, img[0])), word_pow(sys.V, checked_sub(0, img[1]))),
      word_pow(sys.G, img[2]));
  return {lhs, rhs};
}

namespace {

/// Largest outward distance of the sampled points from the region.
double containment_defect(std::span<const Vec2> points, const ConvexRegion& region) {
  double defect = 0.0;
  for (const Vec2& p : points) defect = std::max(defect, point_region_distance(p, region));
  return defect;
}

/// Smallest singular value of the 3x2 matrix with columns
/// (a1,b1,c1), (a2,b2,c2) -- the first two columns of L_inv.
double sigma_min_first_columns(const IntMatrix3& l_inv) {
  double g00 = 0.0, g01 = 0.0, g11 = 0.0;
  for (int r = 0; r < 3; ++r) {
    const double x = static_cast<double>(l_inv.entry(r, 0));
    const double y = static_cast<double>(l_inv.entry(r, 1));
    g00 += x * x;
    g01 += x * y;
    g11 += y * y;
  }
  const double tr = g00 + g11;
  const double det = g00 * g11 - g01 * g01;
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  return std::sqrt(std::max(0.0, 0.5 * (tr - disc)));
}

}  // namespace

DiscontinuityCertificate discontinuity_certificate(const PushforwardSystem& sys,
                                                   const RotationSetEstimate& rho, double R,
                                                   int k_scan, int grid_n, bool parallel) {
  const double clearance = check_hypothesis(sys, rho);
  if (!(clearance > 0.0)) {
    throw CertificateFailedError("hypothesis fails: rotation set meets the pulled-back line");
  }
  if (k_scan < 1) throw Error("k_scan must be >= 1");

  DiscontinuityCertificate cert;
  cert.ball_radius = R;
  cert.k_scan = k_scan;
  cert.grid_n = grid_n;
  cert.hypothesis_clearance = clearance;

  const bool vacuous_line = std::isinf(clearance);
  const double inflate_r = vacuous_line ? 1.0 : clearance / 2.0;
  cert.envelope = inflate(rho.outer, inflate_r);
  if (vacuous_line) {
    cert.line_clearance = std::numeric_limits<double>::infinity();
  } else {
    // The inflated polygon overshoots the exact half-clearance by <= 1%;
    // take the measured distance so the certificate inequality stays valid.
    const auto line = pullback_infinity_line(sys.L);
    cert.line_clearance = std::min(clearance / 2.0, line_region_distance(*line, cert.envelope));
    if (!(cert.line_clearance > 0.0)) {
      throw CertificateFailedError("envelope swallowed the clearance margin");
    }
  }

  OrbitCache cache = OrbitCache::center_grid(sys.F, grid_n, parallel);
  cache.ensure(k_scan);
  cache.ensure(-static_cast<std::int64_t>(k_scan));

  // defect[k] = how far the sampled D(F^{+-k}) sticks out of k * envelope.
  std::vector<double> defect_pos(static_cast<std::size_t>(k_scan) + 1, 0.0);
  std::vector<double> defect_neg(static_cast<std::size_t>(k_scan) + 1, 0.0);
  {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int k = 1; k <= k_scan; ++k) {
      try {
        const ConvexRegion pos = scale_region(cert.envelope, static_cast<double>(k));
        const ConvexRegion neg = scale_region(cert.envelope, -static_cast<double>(k));
        defect_pos[static_cast<std::size_t>(k)] = containment_defect(cache.displacements(k), pos);
        defect_neg[static_cast<std::size_t>(k)] = containment_defect(cache.displacements(-k), neg);
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  }

  const double contain_tol = 1e-9;
  int last_fail = 0;
  for (int k = 1; k <= k_scan; ++k) {
    if (defect_pos[static_cast<std::size_t>(k)] > contain_tol * std::max(1.0, double(k)) ||
        defect_neg[static_cast<std::size_t>(k)] > contain_tol * std::max(1.0, double(k))) {
      last_fail = k;
    }
  }
  if (last_fail >= k_scan) {
    throw CertificateFailedError("no k0 <= k_scan satisfies D(F^k) within k * envelope");
  }
  cert.k_threshold = last_fail + 1;

  double defect_radius = 0.0;  // R': worst outward defect among transient iterates
  for (int k = 1; k < cert.k_threshold; ++k) {
    defect_radius = std::max(defect_radius, defect_pos[static_cast<std::size_t>(k)]);
    defect_radius = std::max(defect_radius, defect_neg[static_cast<std::size_t>(k)]);
  }
  cert.defect_radius = defect_radius;

  // Case 1 of the displacement argument fires for |m c1 + n c2| > (2R+R')/eps;
  // below that, (m c1 + n c2) * envelope stays inside B(0, R'').
  const double case1_threshold =
      vacuous_line ? 0.0 : (2.0 * R + cert.defect_radius) / cert.line_clearance;
  const double c_max = std::floor(case1_threshold);
  cert.envelope_reach = c_max * cert.envelope.max_norm();

  const double sigma = sigma_min_first_columns(sys.L_inv);
  if (!(sigma > 0.0)) throw CertificateFailedError("degenerate column pair in L_inv");
  const double case2_threshold = 2.0 * R + cert.defect_radius + cert.envelope_reach;
  cert.separation_bound =
      std::sqrt(2.0) * std::max(case1_threshold, case2_threshold) / sigma;
  return cert;
}

EmpiricalCheckReport discontinuity_empirical_check(const PushforwardSystem& sys,
                                                   const DiscontinuityCertificate& cert,
                                                   int trials, std::uint64_t seed, int hit_grid,
                                                   bool parallel) {
  EmpiricalCheckReport rep;
  rep.separation_bound = cert.separation_bound;
  rep.seed = seed;
  const double b = cert.separation_bound;
  if (!(b > 0.0) || std::isinf(b)) throw Error("certificate has no usable separation bound");

  // All integer pairs in the annulus b < ||(m,n)|| <= 2b; (0,0) is excluded
  // automatically. Subsample deterministically when there are too many.
  std::vector<std::pair<std::int64_t, std::int64_t>> candidates;
  const auto reach = static_cast<std::int64_t>(std::ceil(2.0 * b));
  for (std::int64_t m = -reach; m <= reach; ++m) {
    for (std::int64_t n = -reach; n <= reach; ++n) {
      const double r = std::hypot(static_cast<double>(m), static_cast<double>(n));
      if (r > b && r <= 2.0 * b) candidates.emplace_back(m, n);
    }
  }
  if (candidates.size() > static_cast<std::size_t>(trials)) {
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(static_cast<std::size_t>(trials));
    std::sort(candidates.begin(), candidates.end());
  }
  rep.trials = static_cast<int>(candidates.size());

  const Box ball_box{{-cert.ball_radius, -cert.ball_radius},
                     {cert.ball_radius, cert.ball_radius}};
  OrbitCache cache = OrbitCache::box_grid(sys.F, ball_box, hit_grid, parallel);
  std::int64_t f_lo = 0, f_hi = 0;
  for (const auto& [m, n] : candidates) {
    const std::int64_t f = checked_add(checked_mul(m, sys.U.f), checked_mul(n, sys.V.f));
    f_lo = std::min(f_lo, f);
    f_hi = std::max(f_hi, f);
  }
  cache.ensure(f_lo);
  cache.ensure(f_hi);

  std::vector<char> violated(candidates.size(), 0);
  {
    std::exception_ptr first_error = nullptr;
    const std::ptrdiff_t n_cand = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < n_cand; ++i) {
      try {
        const auto& [m, n] = candidates[static_cast<std::size_t>(i)];
        const ActionWord w = word_compose(word_pow(sys.U, m), word_pow(sys.V, n));
        if (image_intersects_prepared(w, ball_box, cache)) {
          violated[static_cast<std::size_t>(i)] = 1;
        }
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (violated[i]) {
      ++rep.violations;
      rep.violating.push_back(candidates[i]);
    }
  }
  return rep;
}

TheoremReport verify_theorem(const PushforwardSystem& sys, const EstimatorParams& params,
                             const RotationSetEstimate* classical) {
  TheoremReport rep;
  rep.classical_est =
      classical ? *classical
                : classical_rotation_set(sys.F, params.ladder, params.grid_n, params.parallel);
  rep.hypothesis_clearance = check_hypothesis(sys, rep.classical_est);
  if (!(rep.hypothesis_clearance > 0.0)) {
    throw RegionMeetsInfinityLineError("hypothesis fails: estimate meets the pulled-back line");
  }

  rep.image_inner = apply_hat_region(sys.L, rep.classical_est.inner);
  rep.image_outer = apply_hat_region(sys.L, rep.classical_est.outer);

  ZActionProblem prob;
  prob.U = sys.U;
  prob.V = sys.V;
  prob.G = sys.G;
  prob.F = sys.F;
  prob.K = params.K;
  prob.p_min = params.p_min;
  prob.p_max = params.p_max;
  prob.window = params.window ? *params.window : default_window(rep.image_outer);
  prob.hit_grid = params.hit_grid;
  prob.parallel = params.parallel;
  rep.zaction = zaction_rotation_set(prob);

  if (!rep.zaction.estimate.inner.empty()) {
    rep.distance = hausdorff(rep.image_inner, rep.zaction.estimate.inner);
    // Image-side bar: how much the classical uncertainty widens under Lhat.
    const double image_bar = hausdorff(rep.image_outer, rep.image_inner);
    rep.combined_bound = image_bar + rep.zaction.estimate.margin;
    rep.pass = rep.distance <= rep.combined_bound;
  }
  return rep;
}

}  // namespace rotset
