#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "rotset/config.hpp"
#include "rotset/errors.hpp"
#include "rotset/pushforward.hpp"
#include "rotset/report.hpp"
#include "rotset/rotation.hpp"
#include "rotset/sl3_random.hpp"
#include "rotset/svg.hpp"

namespace {

using namespace rotset;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitEstimator = 3;
constexpr int kExitHypothesis = 4;
constexpr int kExitCertificate = 5;

void echo_map(Report& rep, const TorusLift& lift) {
  rep.set("map.family", lift.family_name());
  switch (lift.family()) {
    case LiftFamily::Translation:
      rep.set_double("map.alpha", lift.params()[0]);
      rep.set_double("map.beta", lift.params()[1]);
      break;
    case LiftFamily::SkewShear:
      rep.set("map.axis", lift.axis() == ShearAxis::Vertical ? "vertical" : "horizontal");
      rep.set_double("map.omega", lift.params()[0]);
      rep.set_doubles("map.psi", lift.cosine_coeffs());
      break;
    case LiftFamily::TwoWave:
      rep.set_double("map.p1", lift.params()[0]);
      rep.set_double("map.p2", lift.params()[1]);
      rep.set_double("map.q1", lift.params()[2]);
      rep.set_double("map.q2", lift.params()[3]);
      break;
  }
}

void write_estimate(Report& rep, const std::string& prefix, const RotationSetEstimate& est) {
  std::vector<double> ladder(est.iterate_ladder.begin(), est.iterate_ladder.end());
  rep.set_int(prefix + ".grid", est.grid_n);
  rep.set_doubles(prefix + ".ladder", ladder);
  rep.set_doubles(prefix + ".trace", est.hausdorff_trace);
  rep.set_double(prefix + ".margin", est.margin);
  rep.set_region(prefix + ".inner", est.inner);
  rep.set_region(prefix + ".outer", est.outer);
}

void write_zaction(Report& rep, const RunConfig& cfg, const ZActionResult& z,
                   const SlopeWindow& window) {
  rep.set_int("zaction.p_min", cfg.p_min);
  rep.set_int("zaction.p_max", cfg.p_max);
  rep.set_doubles("zaction.window", {window.x_lo, window.x_hi, window.y_lo, window.y_hi});
  rep.set_int("zaction.hit_grid", cfg.hit_grid);
  rep.set_int("zaction.hits", static_cast<std::int64_t>(z.hits.size()));
  rep.set_int("zaction.deep_hits", static_cast<std::int64_t>(z.deep_hits));
  rep.set_bool("zaction.empty_hit_set", z.empty_hit_set);
  if (!z.estimate.inner.empty()) {
    rep.set_double("zaction.margin", z.estimate.margin);
    rep.set_region("zaction.inner", z.estimate.inner);
    rep.set_region("zaction.outer", z.estimate.outer);
  }
}

void save_report(const Report& rep, const RunConfig& cfg, const std::string& out_flag) {
  std::string path = !out_flag.empty() ? out_flag : cfg.report_path;
  if (path.empty()) path = "rotset_report.txt";
  rep.save(path);
  std::cout << "report written to " << path << "\n";
}

int cmd_estimate(const RunConfig& cfg, const std::string& out_flag, bool parallel) {
  if (!cfg.has_lift) throw ConfigError(0, "estimate needs a [map] section");
  const RotationSetEstimate est =
      classical_rotation_set(cfg.lift, cfg.ladder, cfg.grid_n, parallel);
  Report rep;
  rep.set("rotset.report", "estimate");
  echo_map(rep, cfg.lift);
  write_estimate(rep, "estimate", est);
  save_report(rep, cfg, out_flag);
  return kExitOk;
}

int cmd_pushforward(const RunConfig& cfg, const std::string& out_flag, bool parallel) {
  if (!cfg.has_lift) throw ConfigError(0, "pushforward needs a [map] section");
  if (!cfg.matrix) throw ConfigError(0, "pushforward needs a [matrix] section");

  PushforwardSystem sys;
  try {
    sys = build_pushforward(cfg.lift, *cfg.matrix);
  } catch (const NotUnimodularError& e) {
    throw ConfigError(0, e.what());
  }

  Report rep;
  rep.set("rotset.report", "pushforward");
  echo_map(rep, cfg.lift);
  {
    std::string entries;
    for (int i = 0; i < 9; ++i) {
      if (i) entries += ' ';
      entries += std::to_string(cfg.matrix->entries()[static_cast<std::size_t>(i)]);
    }
    rep.set("matrix.entries", entries);
  }

  const RotationSetEstimate classical =
      classical_rotation_set(sys.F, cfg.ladder, cfg.grid_n, parallel);
  write_estimate(rep, "classical", classical);

  const double clearance = check_hypothesis(sys, classical);
  if (const auto line = pullback_infinity_line(sys.L)) {
    rep.set_doubles("hypothesis.line", {line->u, line->v, line->w});
  } else {
    rep.set("hypothesis.line", "none");
  }
  rep.set_double("hypothesis.distance", clearance);
  rep.set_bool("hypothesis.holds", clearance > 0.0);
  if (!(clearance > 0.0)) {
    save_report(rep, cfg, out_flag);
    std::cerr << "hypothesis fails: rotation-set estimate meets the pulled-back line\n";
    return kExitHypothesis;
  }

  DiscontinuityCertificate cert;
  try {
    cert = discontinuity_certificate(sys, classical, cfg.cert_radius, cfg.k_scan, cfg.cert_grid,
                                     parallel);
  } catch (const CertificateFailedError& e) {
    rep.set_bool("certificate.valid", false);
    rep.set("certificate.error", e.what());
    save_report(rep, cfg, out_flag);
    std::cerr << "certificate failed: " << e.what() << "\n";
    return kExitCertificate;
  }
  rep.set_bool("certificate.valid", true);
  rep.set_double("certificate.ball_radius", cert.ball_radius);
  rep.set_double("certificate.line_clearance", cert.line_clearance);
  rep.set_int("certificate.k_threshold", cert.k_threshold);
  rep.set_double("certificate.defect_radius", cert.defect_radius);
  rep.set_double("certificate.envelope_reach", cert.envelope_reach);
  rep.set_double("certificate.separation_bound", cert.separation_bound);
  rep.set_int("certificate.k_scan", cert.k_scan);
  rep.set_int("certificate.grid", cert.grid_n);
  rep.set("certificate.note", "containments are sampled on the grid, not proven");

  const EmpiricalCheckReport emp =
      discontinuity_empirical_check(sys, cert, cfg.trials, cfg.seed, cfg.hit_grid, parallel);
  rep.set_int("empirical.trials", emp.trials);
  rep.set_int("empirical.violations", emp.violations);
  rep.set_int("empirical.seed", static_cast<std::int64_t>(emp.seed));

  const TheoremReport thm = verify_theorem(sys, cfg.estimator_params(parallel), &classical);
  const SlopeWindow window = cfg.window ? *cfg.window : default_window(thm.image_outer);
  write_zaction(rep, cfg, thm.zaction, window);
  rep.set_region("theorem.image_inner", thm.image_inner);
  rep.set_region("theorem.image_outer", thm.image_outer);
  if (!thm.zaction.estimate.inner.empty()) {
    rep.set_double("theorem.distance", thm.distance);
    rep.set_double("theorem.bound", thm.combined_bound);
    rep.set_bool("theorem.pass", thm.pass);
  }

  save_report(rep, cfg, out_flag);
  const bool ok = thm.pass && emp.violations == 0 && !thm.zaction.estimate.inner.empty();
  if (!ok) {
    std::cerr << (emp.violations > 0 ? "empirical check found violations\n"
                                     : "theorem distance exceeds the declared bars\n");
    return emp.violations > 0 ? kExitCertificate : kExitEstimator;
  }
  return kExitOk;
}

int cmd_render(const std::string& report_path, const std::string& out_flag) {
  Report rep;
  try {
    rep = Report::load(report_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }
  const std::string svg = render_report_svg(rep);
  const std::string out = out_flag.empty() ? report_path + ".svg" : out_flag;
  std::ofstream os(out, std::ios::binary);
  if (!os) {
    std::cerr << "cannot write " << out << "\n";
    return kExitConfig;
  }
  os << svg;
  std::cout << "figure written to " << out << "\n";
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, bool parallel) {
  int failed = 0;
  const auto check = [&](const char* name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failed;
  };
  std::mt19937_64 rng(seed);

  {
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
      const Vec2 v{coord(rng), coord(rng)};
      ok = ok && chart(embed(v)) == v;
    }
    check("chart of embedded point is the identity", ok);
  }
  {
    bool ok = true;
    std::uniform_int_distribution<std::int64_t> tri(-9, 9);
    for (int i = 0; i < 200 && ok; ++i) {
      const IntMatrix3 L = random_sl3(rng);
      PushforwardSystem sys = build_pushforward(TorusLift::translation(0.0, 0.0), L);
      const IntTriple t{tri(rng), tri(rng), tri(rng)};
      const auto [lhs, rhs] = word_correspondence(sys, t);
      ok = lhs == rhs && lhs == ActionWord{-t[0], -t[1], t[2]};
    }
    check("word correspondence is an exact integer identity", ok);
  }
  {
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      std::vector<Vec2> pts;
      for (int j = 0; j < 40; ++j) pts.emplace_back(coord(rng), coord(rng));
      const ConvexRegion h1 = hull(pts);
      const ConvexRegion h2 = hull(h1.vertices());
      ok = h1.vertices() == h2.vertices();
    }
    check("hull is idempotent", ok);
  }
  {
    const auto est = classical_rotation_set(TorusLift::translation(0.25, 0.5), power_ladder(16),
                                            16, parallel);
    check("translation estimate collapses to its rotation vector",
          est.inner.size() == 1 && est.inner.vertices()[0] == Vec2{0.25, 0.5} &&
              est.margin == 0.0);
  }
  {
    const TorusLift f = TorusLift::two_wave(0.1, 0.2, 0.05, 0.05);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
      const Vec2 z{coord(rng), coord(rng)};
      ok = ok && distance(f.inverse(f.apply(z)), z) < 1e-9;
    }
    check("inverse round-trip within 1e-9", ok);
  }
  std::cout << (failed == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotset: rotation sets of torus maps and their projective pushforwards"};
  app.require_subcommand(1);

  std::string config_path, out_path, render_input;
  std::uint64_t seed_flag = 0;
  bool seed_given = false;
  int threads = 0;

  const auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", config_path, "run configuration file");
    if (needs_config) opt->required();
    cmd->add_option("--out", out_path, "output path (overrides [output] report)");
    cmd->add_option_function<std::uint64_t>(
        "--seed",
        [&](std::uint64_t v) {
          seed_flag = v;
          seed_given = true;
        },
        "seed for sampled checks");
    cmd->add_option("--threads", threads, "OpenMP thread count (0 = default)");
  };

  auto* estimate = app.add_subcommand("estimate", "classical rotation-set estimate");
  add_common(estimate, true);
  auto* pushforward =
      app.add_subcommand("pushforward", "build U,V,G from L, certify, and verify the pushforward");
  add_common(pushforward, true);
  auto* render = app.add_subcommand("render", "render a report to SVG");
  render->add_option("report", render_input, "report file")->required();
  render->add_option("--out", out_path, "SVG output path");
  auto* selftest = app.add_subcommand("selftest", "quick internal checks");
  add_common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif
  const bool parallel = true;

  try {
    if (render->parsed()) return cmd_render(render_input, out_path);
    if (selftest->parsed()) return cmd_selftest(seed_given ? seed_flag : 12345, parallel);

    RunConfig cfg = load_config(config_path);
    if (seed_given) cfg.seed = seed_flag;
    if (estimate->parsed()) return cmd_estimate(cfg, out_path, parallel);
    if (pushforward->parsed()) return cmd_pushforward(cfg, out_path, parallel);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitEstimator;
  }
  return kExitConfig;
}
