// Timing comparison between the OpenMP kernels and their serial reference
// paths: orbit-table extension, triple enumeration, certificate scan.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rotset/pushforward.hpp"
#include "rotset/rotation.hpp"

using namespace rotset;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <typename Fn>
void time_pair(const char* name, Fn&& run) {
  const auto t_serial = clock_type::now();
  run(false);
  const double serial = seconds_since(t_serial);
  const auto t_parallel = clock_type::now();
  run(true);
  const double parallel = seconds_since(t_parallel);
  std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run serially\n");
#endif

  const TorusLift skew = TorusLift::skew_shear(ShearAxis::Vertical, 0.0, {0.5, -0.5});
  const TorusLift wave = TorusLift::two_wave(0.1, -0.2, 0.05, 0.04);

  time_pair("orbit tables skew 512^2x256", [&](bool parallel) {
    OrbitCache cache = OrbitCache::center_grid(skew, 512, parallel);
    cache.ensure(256);
  });

  time_pair("orbit tables wave 256^2x128", [&](bool parallel) {
    OrbitCache cache = OrbitCache::center_grid(wave, 256, parallel);
    cache.ensure(128);
    cache.ensure(-32);
  });

  time_pair("classical estimate wave", [&](bool parallel) {
    classical_rotation_set(wave, power_ladder(128), 256, parallel);
  });

  time_pair("zaction enumeration", [&](bool parallel) {
    ZActionProblem prob;
    prob.U = {1, 0, -1};
    prob.V = word_t();
    prob.G = word_f();
    prob.F = TorusLift::translation(0.5, 1.0 / 3.0);
    prob.p_max = 128;
    prob.window = SlopeWindow{0.0, 2.0, -0.5, 1.5};
    prob.hit_grid = 32;
    prob.parallel = parallel;
    zaction_rotation_set(prob);
  });

  time_pair("certificate scan wave", [&](bool parallel) {
    const auto sys = build_pushforward(wave, IntMatrix3({1, 0, 0, 0, 1, 0, -1, 0, 1}));
    const auto rho = classical_rotation_set(wave, power_ladder(64), 64, parallel);
    discontinuity_certificate(sys, rho, 1.0, 128, 64, parallel);
  });

  return 0;
}
