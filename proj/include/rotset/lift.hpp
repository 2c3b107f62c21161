#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotset/vec2.hpp"

namespace rotset {

enum class LiftFamily { Translation, SkewShear, TwoWave };
enum class ShearAxis { Vertical, Horizontal };

/// A lift F(z) = z + delta(z) of a torus homeomorphism isotopic to the
/// identity; delta is Z^2-periodic by construction, so F commutes with the
/// unit translations S and T exactly.
///
/// Families:
///   Translation(a, b):        F(z) = z + (a, b)
///   SkewShear(axis, w, psi):  vertical axis: F(x,y) = (x + w, y + psi(x))
///                             with psi(x) = c0 + sum_j c_j cos(2 pi j x)
///   TwoWave(p1,p2,q1,q2):     F(x,y) = (x + p1 + q1 sin 2 pi y,
///                                       y + p2 + q2 sin 2 pi x),
///                             valid while 4 pi^2 |q1 q2| < 1.
class TorusLift {
 public:
  /// Defaults to the zero translation (the identity lift).
  TorusLift() = default;

  static TorusLift translation(double a, double b);
  static TorusLift skew_shear(ShearAxis axis, double omega, std::vector<double> cosine_coeffs);
  static TorusLift two_wave(double p1, double p2, double q1, double q2);

  Vec2 apply(Vec2 z) const { return z + displacement(z); }
  Vec2 displacement(Vec2 z) const;

  /// Solves w + delta(w) = z by damped fixed-point iteration (tol 1e-12,
  /// at most 200 steps). Throws InverseNotConvergedError.
  Vec2 inverse(Vec2 z) const;

  /// F^k(z) for any integer k. Translation uses the closed form z + k*delta;
  /// other families iterate.
  Vec2 iterate(Vec2 z, std::int64_t k) const;

  /// Same as iterate() but always loops step by step; reference path for
  /// testing the closed forms.
  Vec2 iterate_naive(Vec2 z, std::int64_t k) const;

  LiftFamily family() const { return family_; }
  bool constant_displacement() const { return family_ == LiftFamily::Translation; }

  // Parameter access for config echo and reports.
  const std::vector<double>& params() const { return params_; }
  ShearAxis axis() const { return axis_; }
  const std::vector<double>& cosine_coeffs() const { return coeffs_; }
  std::string family_name() const;

 private:
  double psi(double s) const;

  LiftFamily family_ = LiftFamily::Translation;
  ShearAxis axis_ = ShearAxis::Vertical;
  std::vector<double> params_{0.0, 0.0};  // translation: {a,b}; skew: {omega}; twowave: {p1..q2}
  std::vector<double> coeffs_;            // skew shear cosine series
};

}  // namespace rotset
