#include "rotset/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rotset/errors.hpp"

namespace rotset {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void Report::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : kv_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  kv_.emplace_back(key, value);
}

void Report::set_double(const std::string& key, double v) { set(key, format_double(v)); }

void Report::set_int(const std::string& key, std::int64_t v) { set(key, std::to_string(v)); }

void Report::set_bool(const std::string& key, bool v) { set(key, v ? "true" : "false"); }

void Report::set_doubles(const std::string& key, const std::vector<double>& vs) {
  std::string joined;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) joined += ' ';
    joined += format_double(vs[i]);
  }
  set(key, joined);
}

void Report::set_region(const std::string& prefix, const ConvexRegion& r) {
  set_int(prefix + ".count", static_cast<std::int64_t>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    set(prefix + ".v" + std::to_string(i),
        format_double(r.vertices()[i].x) + " " + format_double(r.vertices()[i].y));
  }
}

bool Report::has(const std::string& key) const {
  for (const auto& [k, v] : kv_) {
    if (k == key) return true;
  }
  return false;
}

const std::string& Report::get(const std::string& key) const {
  for (const auto& [k, v] : kv_) {
    if (k == key) return v;
  }
  throw Error("report key not found: " + key);
}

double Report::get_double(const std::string& key) const {
  const std::string& s = get(key);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw Error("report key " + key + " is not numeric: " + s);
  return v;
}

std::int64_t Report::get_int(const std::string& key) const {
  return static_cast<std::int64_t>(std::strtoll(get(key).c_str(), nullptr, 10));
}

bool Report::get_bool(const std::string& key) const { return get(key) == "true"; }

std::vector<double> Report::get_doubles(const std::string& key) const {
  std::istringstream is(get(key));
  std::vector<double> out;
  double v;
  while (is >> v) out.push_back(v);
  return out;
}

ConvexRegion Report::get_region(const std::string& prefix) const {
  const std::int64_t count = get_int(prefix + ".count");
  std::vector<Vec2> verts;
  verts.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    const auto pair = get_doubles(prefix + ".v" + std::to_string(i));
    if (pair.size() != 2) throw Error("malformed vertex under " + prefix);
    verts.emplace_back(pair[0], pair[1]);
  }
  return ConvexRegion{std::move(verts)};
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [k, v] : kv_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

Report Report::from_text(const std::string& text) {
  Report rep;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw Error("report line " + std::to_string(lineno) + " malformed");
    rep.kv_.emplace_back(line.substr(0, eq), line.substr(eq + 3));
  }
  return rep;
}

Report Report::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read report: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

void Report::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report: " + path);
  out << to_text();
}

}  // namespace rotset
