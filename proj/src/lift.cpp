#include "rotset/lift.hpp"

#include <cmath>
#include <cstdlib>

#include "rotset/errors.hpp"

namespace rotset {

TorusLift TorusLift::translation(double a, double b) {
  TorusLift lift;
  lift.family_ = LiftFamily::Translation;
  lift.params_ = {a, b};
  return lift;
}

TorusLift TorusLift::skew_shear(ShearAxis axis, double omega, std::vector<double> cosine_coeffs) {
  if (cosine_coeffs.empty()) throw Error("skew shear needs at least one cosine coefficient");
  TorusLift lift;
  lift.family_ = LiftFamily::SkewShear;
  lift.axis_ = axis;
  lift.params_ = {omega};
  lift.coeffs_ = std::move(cosine_coeffs);
  return lift;
}

TorusLift TorusLift::two_wave(double p1, double p2, double q1, double q2) {
  // Invertibility: solving F(x,y) = c reduces to a scalar fixed point with
  // Lipschitz constant 4 pi^2 |q1 q2|; keep it a contraction.
  if (4.0 * M_PI * M_PI * std::fabs(q1 * q2) >= 1.0) {
    throw Error("two-wave parameters violate the homeomorphism bound 4*pi^2*|q1*q2| < 1");
  }
  TorusLift lift;
  lift.family_ = LiftFamily::TwoWave;
  lift.params_ = {p1, p2, q1, q2};
  return lift;
}

double TorusLift::psi(double s) const {
  double acc = coeffs_[0];
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    acc += coeffs_[j] * std::cos(2.0 * M_PI * static_cast<double>(j) * s);
  }
  return acc;
}

Vec2 TorusLift::displacement(Vec2 z) const {
  switch (family_) {
    case LiftFamily::Translation:
      return {params_[0], params_[1]};
    case LiftFamily::SkewShear:
      if (axis_ == ShearAxis::Vertical) return {params_[0], psi(z.x)};
      return {psi(z.y), params_[0]};
    case LiftFamily::TwoWave:
      return {params_[0] + params_[2] * std::sin(2.0 * M_PI * z.y),
              params_[1] + params_[3] * std::sin(2.0 * M_PI * z.x)};
  }
  return {};
}

Vec2 TorusLift::inverse(Vec2 z) const {
  constexpr double kTol = 1e-12;
  constexpr int kMaxIter = 200;
  Vec2 w = z - displacement(z);
  double resid = norm_inf(z - apply(w));
  double damping = 1.0;
  for (int i = 0; i < kMaxIter && resid > kTol; ++i) {
    const Vec2 trial = w + damping * (z - apply(w));
    const double trial_resid = norm_inf(z - apply(trial));
    if (trial_resid < resid) {
      w = trial;
      resid = trial_resid;
      damping = std::min(1.0, damping * 2.0);
    } else {
      damping *= 0.5;
      if (damping < 1.0 / 64.0) break;
    }
  }
  if (resid > kTol) {
    throw InverseNotConvergedError("inverse fixed-point solve stalled, residual " +
                                   std::to_string(resid));
  }
  return w;
}

Vec2 TorusLift::iterate(Vec2 z, std::int64_t k) const {
  if (family_ == LiftFamily::Translation) {
    const double kk = static_cast<double>(k);
    return {z.x + kk * params_[0], z.y + kk * params_[1]};
  }
  return iterate_naive(z, k);
}

Vec2 TorusLift::iterate_naive(Vec2 z, std::int64_t k) const {
  if (k >= 0) {
    for (std::int64_t i = 0; i < k; ++i) z = apply(z);
  } else {
    for (std::int64_t i = 0; i < -k; ++i) z = inverse(z);
  }
  return z;
}

std::string TorusLift::family_name() const {
  switch (family_) {
    case LiftFamily::Translation:
      return "translation";
    case LiftFamily::SkewShear:
      return "skewshear";
    case LiftFamily::TwoWave:
      return "twowave";
  }
  return "?";
}

}  // namespace rotset
