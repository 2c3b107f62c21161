#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rotset/matrix.hpp"
#include "rotset/rotation.hpp"

namespace rotset {

/// The three commuting maps built from a lift F and L in SL(3,Z):
/// with L^-1 = [[a1,a2,a3],[b1,b2,b3],[c1,c2,c3]],
///   U = S^a1 T^b1 F^-c1,  V = S^a2 T^b2 F^-c2,  G = S^-a3 T^-b3 F^c3.
struct PushforwardSystem {
  IntMatrix3 L;
  IntMatrix3 L_inv;
  ActionWord U, V, G;
  TorusLift F;
};

PushforwardSystem build_pushforward(const TorusLift& lift, const IntMatrix3& L);

/// Distance from the outer rotation-set estimate to the pulled-back infinity
/// line of L; +inf when the line has no planar part. > 0 means the
/// disjointness hypothesis holds at the estimate's resolution.
double check_hypothesis(const PushforwardSystem& sys, const RotationSetEstimate& rho);

/// Canonical forms of S^-m T^-n F^p and U^-mu V^-nu G^pi with
/// (mu,nu,pi) = L(m,n,p). The two sides agree exactly for every triple.
std::pair<ActionWord, ActionWord> word_correspondence(const PushforwardSystem& sys,
                                                      const IntTriple& mnp);

/// Quantitative proper-discontinuity data for the U,V action:
/// an envelope O of the rotation set clear of the pulled-back line by eps,
/// the iterate threshold k0 with sampled D(F^k) inside k*O for |k| >= k0,
/// the transient defect radius (R'), the scaled-envelope radius (R''), and
/// the explicit separation bound on ||(m,n)|| beyond which U^m V^n displaces
/// B(0,R) off itself. All containments are sampled, not proven.
struct DiscontinuityCertificate {
  double ball_radius = 0.0;       // R
  double line_clearance = 0.0;    // eps
  ConvexRegion envelope;          // O
  int k_threshold = 0;            // k0
  double defect_radius = 0.0;     // R'
  double envelope_reach = 0.0;    // R''
  double separation_bound = 0.0;  // ||(m,n)|| threshold
  int k_scan = 0;
  int grid_n = 0;
  double hypothesis_clearance = 0.0;
};

DiscontinuityCertificate discontinuity_certificate(const PushforwardSystem& sys,
                                                   const RotationSetEstimate& rho, double R,
                                                   int k_scan, int grid_n = 64,
                                                   bool parallel = true);

struct EmpiricalCheckReport {
  int trials = 0;
  int violations = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> violating;
  double separation_bound = 0.0;
  std::uint64_t seed = 0;
};

/// Samples (m,n) with separation_bound < ||(m,n)|| <= 2*separation_bound and
/// checks, on the bounding box of B(0,R), that U^m V^n (B) misses B. Any
/// violation falsifies the certificate computation.
EmpiricalCheckReport discontinuity_empirical_check(const PushforwardSystem& sys,
                                                   const DiscontinuityCertificate& cert,
                                                   int trials, std::uint64_t seed,
                                                   int hit_grid = 32, bool parallel = true);

struct TheoremReport {
  RotationSetEstimate classical_est;
  ConvexRegion image_inner;  // Lhat(classical inner)
  ConvexRegion image_outer;  // Lhat(classical outer)
  ZActionResult zaction;
  double distance = 0.0;        // hausdorff(image_inner, zaction inner)
  double combined_bound = 0.0;  // image-side bar + zaction margin
  bool pass = false;
  double hypothesis_clearance = 0.0;
};

/// Compares Lhat(rho_{S,T}(F)) with the direct estimate of rho_{U,V}(G).
/// A precomputed classical estimate (same parameters) may be passed to avoid
/// recomputing it.
TheoremReport verify_theorem(const PushforwardSystem& sys, const EstimatorParams& params,
                             const RotationSetEstimate* classical = nullptr);

}  // namespace rotset
