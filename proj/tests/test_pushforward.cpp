#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "rotset/pushforward.hpp"
#include "rotset/sl3_random.hpp"

using namespace rotset;

namespace {

const IntMatrix3 kWorkedL({1, 0, 0, 0, 1, 0, -1, 0, 1});
const IntMatrix3 kAffineShear({1, 1, 0, 0, 1, 0, 0, 0, 1});

TorusLift worked_translation() { return TorusLift::translation(0.5, 1.0 / 3.0); }

}  // namespace

TEST_CASE("build_pushforward reads the inverse columns") {
  SUBCASE("identity gives the original basis") {
    const auto sys = build_pushforward(worked_translation(), IntMatrix3::identity());
    CHECK(sys.U == word_s());
    CHECK(sys.V == word_t());
    CHECK(sys.G == word_f());
  }
  SUBCASE("worked matrix") {
    const auto sys = build_pushforward(worked_translation(), kWorkedL);
    CHECK(sys.L_inv == IntMatrix3({1, 0, 0, 0, 1, 0, 1, 0, 1}));
    CHECK(sys.U == ActionWord{1, 0, -1});  // S F^-1
    CHECK(sys.V == word_t());
    CHECK(sys.G == word_f());
  }
  SUBCASE("coordinate permutation") {
    const auto sys =
        build_pushforward(worked_translation(), IntMatrix3({0, 0, 1, 1, 0, 0, 0, 1, 0}));
    CHECK(sys.U == ActionWord{0, 0, -1});   // F^-1
    CHECK(sys.V == ActionWord{1, 0, 0});    // S
    CHECK(sys.G == ActionWord{0, -1, 0});   // T^-1
  }
  SUBCASE("non-unimodular input is rejected") {
    CHECK_THROWS_AS(build_pushforward(worked_translation(), IntMatrix3({2, 0, 0, 0, 1, 0, 0, 0, 1})),
                    NotUnimodularError);
  }
}

TEST_CASE("G commutes with U and V in canonical form") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 50; ++i) {
    const auto sys = build_pushforward(worked_translation(), random_sl3(rng));
    CHECK(word_compose(sys.G, sys.U) == word_compose(sys.U, sys.G));
    CHECK(word_compose(sys.G, sys.V) == word_compose(sys.V, sys.G));
  }
}

TEST_CASE("pushforward exponent map is functorial") {
  // The exponent matrix of the construction is J L^-1 J with J = diag(1,1,-1),
  // so composing matrices composes the exponent maps.
  const auto exponent_matrix = [](const PushforwardSystem& sys) {
    IntMatrix3 m;
    m.entry(0, 0) = sys.U.s;
    m.entry(1, 0) = sys.U.t;
    m.entry(2, 0) = sys.U.f;
    m.entry(0, 1) = sys.V.s;
    m.entry(1, 1) = sys.V.t;
    m.entry(2, 1) = sys.V.f;
    m.entry(0, 2) = sys.G.s;
    m.entry(1, 2) = sys.G.t;
    m.entry(2, 2) = sys.G.f;
    return m;
  };
  std::mt19937_64 rng(79);
  const TorusLift lift = worked_translation();
  for (int i = 0; i < 100; ++i) {
    const IntMatrix3 l1 = random_sl3(rng);
    const IntMatrix3 l2 = random_sl3(rng);
    const IntMatrix3 composed = exponent_matrix(build_pushforward(lift, l2 * l1));
    const IntMatrix3 split = exponent_matrix(build_pushforward(lift, l1)) *
                             exponent_matrix(build_pushforward(lift, l2));
    CHECK(composed == split);
  }
}

TEST_CASE("check_hypothesis measures the line clearance") {
  const TorusLift lift = worked_translation();
  const auto rho = classical_rotation_set(lift, power_ladder(16), 16);

  SUBCASE("affine matrix has no planar pulled-back line") {
    const auto sys = build_pushforward(lift, kAffineShear);
    CHECK(std::isinf(check_hypothesis(sys, rho)));
  }
  SUBCASE("worked matrix clears by one half") {
    const auto sys = build_pushforward(lift, kWorkedL);
    CHECK(check_hypothesis(sys, rho) == doctest::Approx(0.5));
  }
  SUBCASE("rotation set on the line gives zero") {
    const TorusLift on_line = TorusLift::translation(1.0, 0.0);
    const auto sys = build_pushforward(on_line, kWorkedL);
    const auto rho_line = classical_rotation_set(on_line, power_ladder(16), 16);
    CHECK(check_hypothesis(sys, rho_line) == 0.0);
  }
}

TEST_CASE("word correspondence examples") {
  SUBCASE("identity matrix") {
    const auto sys = build_pushforward(worked_translation(), IntMatrix3::identity());
    const auto [lhs, rhs] = word_correspondence(sys, {3, -1, 2});
    CHECK(lhs == ActionWord{-3, 1, 2});
    CHECK(rhs == lhs);
  }
  SUBCASE("worked matrix") {
    const auto sys = build_pushforward(worked_translation(), kWorkedL);
    const auto [lhs, rhs] = word_correspondence(sys, {1, 2, 3});
    CHECK(matrix_apply(sys.L, {1, 2, 3}) == IntTriple{1, 2, 2});
    CHECK(lhs == ActionWord{-1, -2, 3});
    CHECK(rhs == lhs);
  }
}

TEST_CASE("word correspondence holds for random matrices and triples") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<std::int64_t> tr(-9, 9);
  const TorusLift lift = worked_translation();
  for (int i = 0; i < 1000; ++i) {
    const auto sys = build_pushforward(lift, random_sl3(rng));
    const IntTriple t{tr(rng), tr(rng), tr(rng)};
    const auto [lhs, rhs] = word_correspondence(sys, t);
    CHECK(lhs == rhs);
    CHECK(lhs == ActionWord{-t[0], -t[1], t[2]});
  }
}

TEST_CASE("discontinuity certificate for the worked translation") {
  const TorusLift lift = worked_translation();
  const auto sys = build_pushforward(lift, kWorkedL);
  const auto rho = classical_rotation_set(lift, power_ladder(64), 16);
  const auto cert = discontinuity_certificate(sys, rho, 1.0, 64, 16);

  CHECK(cert.k_threshold == 1);
  CHECK(cert.defect_radius == 0.0);
  CHECK(cert.line_clearance > 0.2);
  CHECK(cert.line_clearance <= 0.25);
  CHECK(std::isfinite(cert.separation_bound));
  CHECK(cert.separation_bound > 0.0);

  const auto emp = discontinuity_empirical_check(sys, cert, 500, 12345, 16);
  CHECK(emp.trials > 0);
  CHECK(emp.violations == 0);
}

TEST_CASE("affine matrices use only the rank-2 linear part") {
  // c1 = c2 = 0: the line pullback is vacuous, case one never triggers and
  // the separation bound reduces to sqrt(2)*(2R + R') / sigma_min of the
  // upper-left column pair.
  const TorusLift lift = worked_translation();
  const auto sys = build_pushforward(lift, kAffineShear);
  const auto rho = classical_rotation_set(lift, power_ladder(32), 16);
  const auto cert = discontinuity_certificate(sys, rho, 1.0, 32, 16);

  CHECK(std::isinf(cert.line_clearance));
  CHECK(cert.envelope_reach == 0.0);
  CHECK(cert.k_threshold == 1);
  CHECK(cert.defect_radius == 0.0);
  // Columns (1,0,0) and (-1,1,0): Gram [[1,-1],[-1,2]], lambda_min = (3-sqrt 5)/2.
  const double sigma = std::sqrt((3.0 - std::sqrt(5.0)) / 2.0);
  CHECK(cert.separation_bound == doctest::Approx(std::sqrt(2.0) * 2.0 / sigma).epsilon(1e-12));

  const auto emp = discontinuity_empirical_check(sys, cert, 300, 99, 16);
  CHECK(emp.violations == 0);
}

TEST_CASE("certificate requires a positive hypothesis margin") {
  const TorusLift on_line = TorusLift::translation(1.0, 0.0);
  const auto sys = build_pushforward(on_line, kWorkedL);
  const auto rho = classical_rotation_set(on_line, power_ladder(16), 16);
  CHECK_THROWS_AS(discontinuity_certificate(sys, rho, 1.0, 32, 16), CertificateFailedError);
}

TEST_CASE("empirical check on a weak two-wave system") {
  const TorusLift lift = TorusLift::two_wave(0.5, 1.0 / 3.0, 0.02, 0.02);
  const auto sys = build_pushforward(lift, kWorkedL);
  const auto rho = classical_rotation_set(lift, power_ladder(32), 32);
  REQUIRE(check_hypothesis(sys, rho) > 0.0);
  const auto cert = discontinuity_certificate(sys, rho, 1.0, 64, 32);
  const auto emp = discontinuity_empirical_check(sys, cert, 200, 2024, 16);
  CHECK(emp.violations == 0);
}

TEST_CASE("verify_theorem for the worked translation") {
  const TorusLift lift = worked_translation();
  const auto sys = build_pushforward(lift, kWorkedL);
  EstimatorParams params;
  params.ladder = power_ladder(64);
  params.grid_n = 32;
  params.p_max = 96;
  const auto rep = verify_theorem(sys, params);
  REQUIRE(rep.image_inner.size() == 1);
  CHECK(distance(rep.image_inner.vertices()[0], {1.0, 2.0 / 3.0}) < 1e-12);
  CHECK(rep.distance <= 0.1);
  CHECK(rep.pass);
}

TEST_CASE("verify_theorem with the affine shear maps the skew segment") {
  const TorusLift skew = TorusLift::skew_shear(ShearAxis::Vertical, 0.0, {0.5, -0.5});
  const auto sys = build_pushforward(skew, kAffineShear);
  EstimatorParams params;
  params.ladder = {1, 2, 4, 8, 16, 32, 64, 128, 200};
  params.grid_n = 128;
  params.p_max = 96;
  const auto rep = verify_theorem(sys, params);
  const ConvexRegion diag = hull(std::vector<Vec2>{{0, 0}, {1, 1}});
  CHECK(hausdorff(rep.image_inner, diag) < 0.05);
  CHECK(rep.distance <= 0.1);
}

TEST_CASE("verify_theorem with the identity reduces to the equivalence check") {
  const TorusLift lift = TorusLift::translation(0.25, 0.5);
  EstimatorParams params;
  params.ladder = power_ladder(32);
  params.grid_n = 16;
  params.p_max = 32;

  const auto sys = build_pushforward(lift, IntMatrix3::identity());
  const auto thm = verify_theorem(sys, params);
  const auto eq = remark1_equivalence_check(lift, params);
  CHECK(thm.distance == eq.distance);  // bit-for-bit
}

TEST_CASE("verify_theorem refuses a failing hypothesis") {
  const TorusLift on_line = TorusLift::translation(1.0, 0.0);
  const auto sys = build_pushforward(on_line, kWorkedL);
  EstimatorParams params;
  params.ladder = power_ladder(16);
  params.grid_n = 16;
  CHECK_THROWS_AS(verify_theorem(sys, params), RegionMeetsInfinityLineError);
}
