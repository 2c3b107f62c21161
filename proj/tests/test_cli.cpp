#include <doctest.h>

#include <string>

#include "rotset/config.hpp"
#include "rotset/report.hpp"
#include "rotset/svg.hpp"

using namespace rotset;

namespace {

const char* kTranslationConfig = R"(# worked translation system
[map]
family = translation
alpha = 0.5
beta = 0.333

[matrix]
entries = 1 0 0 0 1 0 -1 0 1

[estimate]
ladder_max = 64
grid = 32

[zaction]
p_max = 96
hit_grid = 16

[certificate]
radius = 1.0
k_scan = 64
trials = 500
)";

}  // namespace

TEST_CASE("config parses the full schema") {
  const RunConfig cfg = parse_config_text(kTranslationConfig);
  CHECK(cfg.has_lift);
  CHECK(cfg.lift.family_name() == "translation");
  CHECK(cfg.lift.params()[0] == 0.5);
  REQUIRE(cfg.matrix.has_value());
  CHECK(cfg.matrix->entry(2, 0) == -1);
  CHECK(cfg.ladder == power_ladder(64));
  CHECK(cfg.grid_n == 32);
  CHECK(cfg.p_max == 96);
  CHECK(cfg.hit_grid == 16);
  CHECK(cfg.trials == 500);
}

TEST_CASE("config rejects unknown keys with line numbers") {
  const std::string bad = "[map]\nfamily = translation\nalpha = 0.1\nbeta = 0.2\nalphaa = 3\n";
  try {
    parse_config_text(bad);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line == 5);
    CHECK(std::string(e.what()).find("alphaa") != std::string::npos);
  }
}

TEST_CASE("config rejects malformed structure") {
  CHECK_THROWS_AS(parse_config_text("family = translation\n"), ConfigError);  // key before section
  CHECK_THROWS_AS(parse_config_text("[map\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[map]\nfamily translation\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[map]\nfamily = nosuch\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[mapp]\nfamily = translation\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[map]\nfamily = translation\nalpha = x\nbeta = 1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("[matrix]\nentries = 1 2 3\n"), ConfigError);
}

TEST_CASE("config rejects two-wave parameters outside the valid domain") {
  const std::string cfg =
      "[map]\nfamily = twowave\np1 = 0\np2 = 0\nq1 = 0.3\nq2 = 0.3\n";
  CHECK_THROWS_AS(parse_config_text(cfg), ConfigError);
}

TEST_CASE("report round-trips doubles exactly") {
  Report rep;
  rep.set("rotset.report", "estimate");
  rep.set_double("a.third", 1.0 / 3.0);
  rep.set_double("a.tiny", 1e-17);
  rep.set_double("a.neg", -0.1234567890123456789);
  rep.set_doubles("a.list", {0.1, 0.2, 1.0 / 7.0});
  rep.set_region("a.region", box_region({0, 0}, {1.0 / 3.0, 1}));

  const std::string text = rep.to_text();
  const Report back = Report::from_text(text);
  CHECK(back.get_double("a.third") == 1.0 / 3.0);
  CHECK(back.get_double("a.tiny") == 1e-17);
  CHECK(back.get_double("a.neg") == -0.1234567890123456789);
  CHECK(back.get_region("a.region").vertices() == box_region({0, 0}, {1.0 / 3.0, 1}).vertices());
  CHECK(back.to_text() == text);  // byte-stable re-serialization
}

TEST_CASE("report accessors reject missing keys") {
  Report rep;
  rep.set("present", "1");
  CHECK(rep.has("present"));
  CHECK(!rep.has("absent"));
  CHECK_THROWS_AS(rep.get("absent"), Error);
}

TEST_CASE("svg rendering is deterministic and structurally sane") {
  Report rep;
  rep.set("rotset.report", "estimate");
  rep.set_region("estimate.inner", hull(std::vector<Vec2>{{0.25, 0.5}}));
  rep.set_region("estimate.outer", box_region({0.2, 0.45}, {0.3, 0.55}));
  rep.set_doubles("hypothesis.line", {-1.0, 0.0, 1.0});

  const std::string svg1 = render_report_svg(rep);
  const std::string svg2 = render_report_svg(rep);
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") != std::string::npos);
  CHECK(svg1.find("circle") != std::string::npos);     // point marker
  CHECK(svg1.find("dasharray") != std::string::npos);  // infinity-line pullback
  CHECK(svg1.find("</svg>") != std::string::npos);
}

TEST_CASE("svg renders polygon overlays for theorem reports") {
  Report rep;
  rep.set("rotset.report", "pushforward");
  rep.set_region("classical.inner", box_region({0, 0}, {1, 1}));
  rep.set_region("classical.outer", box_region({-0.1, -0.1}, {1.1, 1.1}));
  rep.set_region("zaction.inner", box_region({0.1, 0.1}, {0.9, 0.9}));
  rep.set_region("theorem.image_inner", box_region({0.2, 0.2}, {0.8, 0.8}));
  const std::string svg = render_report_svg(rep);
  CHECK(svg.find("polygon") != std::string::npos);
  CHECK(svg.find("projected image") != std::string::npos);
}
