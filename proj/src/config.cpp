#include "rotset/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "rotset/errors.hpp"

namespace rotset {

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
};

using Section = std::map<std::string, RawEntry>;

double parse_double(const RawEntry& e) {
  char* end = nullptr;
  const double v = std::strtod(e.value.c_str(), &end);
  while (end && *end == ' ') ++end;
  if (end == e.value.c_str() || (end && *end != '\0')) {
    throw ConfigError(e.line, "expected a number, got '" + e.value + "'");
  }
  return v;
}

std::int64_t parse_int(const RawEntry& e) {
  char* end = nullptr;
  const long long v = std::strtoll(e.value.c_str(), &end, 10);
  while (end && *end == ' ') ++end;
  if (end == e.value.c_str() || (end && *end != '\0')) {
    throw ConfigError(e.line, "expected an integer, got '" + e.value + "'");
  }
  return v;
}

std::vector<double> parse_doubles(const RawEntry& e, std::size_t expect = 0) {
  std::istringstream is(e.value);
  std::vector<double> out;
  double v;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw ConfigError(e.line, "expected numbers, got '" + e.value + "'");
  if (expect != 0 && out.size() != expect) {
    throw ConfigError(e.line, "expected " + std::to_string(expect) + " numbers");
  }
  return out;
}

std::vector<std::int64_t> parse_ints(const RawEntry& e, std::size_t expect = 0) {
  std::istringstream is(e.value);
  std::vector<std::int64_t> out;
  std::int64_t v;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw ConfigError(e.line, "expected integers, got '" + e.value + "'");
  if (expect != 0 && out.size() != expect) {
    throw ConfigError(e.line, "expected " + std::to_string(expect) + " integers");
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Pop a key from the section; remaining keys are reported as unknown.
std::optional<RawEntry> take(Section& sec, const std::string& key) {
  const auto it = sec.find(key);
  if (it == sec.end()) return std::nullopt;
  RawEntry e = it->second;
  sec.erase(it);
  return e;
}

void reject_leftovers(const Section& sec, const std::string& name) {
  if (sec.empty()) return;
  const auto& [key, entry] = *sec.begin();
  throw ConfigError(entry.line, "unknown key '" + key + "' in section [" + name + "]");
}

TorusLift build_lift(Section& sec) {
  const auto family = take(sec, "family");
  if (!family) throw ConfigError(0, "[map] section needs a 'family' key");
  const std::string f = family->value;
  if (f == "translation") {
    const auto a = take(sec, "alpha"), b = take(sec, "beta");
    if (!a || !b) throw ConfigError(family->line, "translation needs alpha and beta");
    return TorusLift::translation(parse_double(*a), parse_double(*b));
  }
  if (f == "skewshear") {
    const auto axis = take(sec, "axis");
    const auto omega = take(sec, "omega");
    const auto psi = take(sec, "psi");
    if (!psi) throw ConfigError(family->line, "skewshear needs psi coefficients");
    ShearAxis ax = ShearAxis::Vertical;
    if (axis) {
      if (axis->value == "vertical") {
        ax = ShearAxis::Vertical;
      } else if (axis->value == "horizontal") {
        ax = ShearAxis::Horizontal;
      } else {
        throw ConfigError(axis->line, "axis must be vertical or horizontal");
      }
    }
    return TorusLift::skew_shear(ax, omega ? parse_double(*omega) : 0.0, parse_doubles(*psi));
  }
  if (f == "twowave") {
    const auto p1 = take(sec, "p1"), p2 = take(sec, "p2");
    const auto q1 = take(sec, "q1"), q2 = take(sec, "q2");
    if (!p1 || !p2 || !q1 || !q2) {
      throw ConfigError(family->line, "twowave needs p1, p2, q1, q2");
    }
    try {
      return TorusLift::two_wave(parse_double(*p1), parse_double(*p2), parse_double(*q1),
                                 parse_double(*q2));
    } catch (const Error& err) {
      throw ConfigError(q1->line, err.what());
    }
  }
  throw ConfigError(family->line, "unknown map family '" + f + "'");
}

}  // namespace

EstimatorParams RunConfig::estimator_params(bool parallel) const {
  EstimatorParams p;
  p.ladder = ladder;
  p.grid_n = grid_n;
  p.p_min = p_min;
  p.p_max = p_max;
  p.K = K;
  p.window = window;
  p.hit_grid = hit_grid;
  p.parallel = parallel;
  return p;
}

RunConfig parse_config_text(const std::string& text) {
  std::map<std::string, Section> sections;
  {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::string current;
    while (std::getline(is, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ConfigError(lineno, "unterminated section header");
        current = trim(line.substr(1, line.size() - 2));
        if (current.empty()) throw ConfigError(lineno, "empty section name");
        sections.try_emplace(current);
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ConfigError(lineno, "expected 'key = value'");
      if (current.empty()) throw ConfigError(lineno, "key outside any [section]");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) throw ConfigError(lineno, "empty key");
      if (!sections[current].emplace(key, RawEntry{value, lineno}).second) {
        throw ConfigError(lineno, "duplicate key '" + key + "'");
      }
    }
  }

  static const char* kKnown[] = {"map", "matrix", "estimate", "zaction", "certificate", "output"};
  for (const auto& [name, sec] : sections) {
    bool known = false;
    for (const char* k : kKnown) known = known || name == k;
    if (!known) {
      throw ConfigError(sec.empty() ? 0 : sec.begin()->second.line,
                        "unknown section [" + name + "]");
    }
  }

  RunConfig cfg;

  if (auto it = sections.find("map"); it != sections.end()) {
    cfg.lift = build_lift(it->second);
    cfg.has_lift = true;
    reject_leftovers(it->second, "map");
  }

  if (auto it = sections.find("matrix"); it != sections.end()) {
    Section& sec = it->second;
    if (const auto entries = take(sec, "entries")) {
      const auto ints = parse_ints(*entries, 9);
      std::array<std::int64_t, 9> arr{};
      std::copy(ints.begin(), ints.end(), arr.begin());
      cfg.matrix = IntMatrix3(arr);
    }
    reject_leftovers(sec, "matrix");
  }

  if (auto it = sections.find("estimate"); it != sections.end()) {
    Section& sec = it->second;
    const auto ladder = take(sec, "ladder");
    const auto ladder_max = take(sec, "ladder_max");
    if (ladder && ladder_max) {
      throw ConfigError(ladder->line, "give either ladder or ladder_max, not both");
    }
    if (ladder) {
      const auto ints = parse_ints(*ladder);
      cfg.ladder.assign(ints.begin(), ints.end());
      if (cfg.ladder.empty()) throw ConfigError(ladder->line, "empty ladder");
      for (std::size_t i = 0; i < cfg.ladder.size(); ++i) {
        if (cfg.ladder[i] < 1 || (i > 0 && cfg.ladder[i] <= cfg.ladder[i - 1])) {
          throw ConfigError(ladder->line, "ladder must be strictly increasing, entries >= 1");
        }
      }
    } else if (ladder_max) {
      const auto v = parse_int(*ladder_max);
      if (v < 1) throw ConfigError(ladder_max->line, "ladder_max must be >= 1");
      cfg.ladder = power_ladder(static_cast<int>(v));
    }
    if (const auto grid = take(sec, "grid")) {
      const auto v = parse_int(*grid);
      if (v < 2) throw ConfigError(grid->line, "grid must be >= 2");
      cfg.grid_n = static_cast<int>(v);
    }
    reject_leftovers(sec, "estimate");
  }

  if (auto it = sections.find("zaction"); it != sections.end()) {
    Section& sec = it->second;
    if (const auto v = take(sec, "p_min")) {
      cfg.p_min = static_cast<int>(parse_int(*v));
      if (cfg.p_min < 1) throw ConfigError(v->line, "p_min must be >= 1");
    }
    if (const auto v = take(sec, "p_max")) {
      cfg.p_max = static_cast<int>(parse_int(*v));
      if (cfg.p_max < 1) throw ConfigError(v->line, "p_max must be >= 1");
    }
    if (cfg.p_max < cfg.p_min) throw ConfigError(0, "p_max must be >= p_min");
    if (const auto v = take(sec, "window")) {
      const auto d = parse_doubles(*v, 4);
      cfg.window = SlopeWindow{d[0], d[1], d[2], d[3]};
    }
    if (const auto v = take(sec, "k")) {
      const auto d = parse_doubles(*v, 4);
      cfg.K = Box{{d[0], d[2]}, {d[1], d[3]}};
      if (!cfg.K.positive_area()) throw ConfigError(v->line, "K must have positive area");
    }
    if (const auto v = take(sec, "hit_grid")) {
      cfg.hit_grid = static_cast<int>(parse_int(*v));
      if (cfg.hit_grid < 2) throw ConfigError(v->line, "hit_grid must be >= 2");
    }
    reject_leftovers(sec, "zaction");
  }

  if (auto it = sections.find("certificate"); it != sections.end()) {
    Section& sec = it->second;
    if (const auto v = take(sec, "radius")) {
      cfg.cert_radius = parse_double(*v);
      if (!(cfg.cert_radius > 0.0)) throw ConfigError(v->line, "radius must be > 0");
    }
    if (const auto v = take(sec, "k_scan")) {
      cfg.k_scan = static_cast<int>(parse_int(*v));
      if (cfg.k_scan < 1) throw ConfigError(v->line, "k_scan must be >= 1");
    }
    if (const auto v = take(sec, "grid")) {
      cfg.cert_grid = static_cast<int>(parse_int(*v));
      if (cfg.cert_grid < 2) throw ConfigError(v->line, "grid must be >= 2");
    }
    if (const auto v = take(sec, "trials")) {
      cfg.trials = static_cast<int>(parse_int(*v));
      if (cfg.trials < 1) throw ConfigError(v->line, "trials must be >= 1");
    }
    reject_leftovers(sec, "certificate");
  }

  if (auto it = sections.find("output"); it != sections.end()) {
    Section& sec = it->second;
    if (const auto v = take(sec, "report")) cfg.report_path = v->value;
    if (const auto v = take(sec, "seed")) cfg.seed = static_cast<std::uint64_t>(parse_int(*v));
    reject_leftovers(sec, "output");
  }

  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace rotset
