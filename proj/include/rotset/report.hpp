#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rotset/convex.hpp"

namespace rotset {

/// Flat ordered key/value store backing the structured-text report format:
/// one `path.to.key = value` per line, decimal numerals with 17 significant
/// digits, written and re-read byte-stably.
class Report {
 public:
  void set(const std::string& key, const std::string& value);
  void set_double(const std::string& key, double v);
  void set_int(const std::string& key, std::int64_t v);
  void set_bool(const std::string& key, bool v);
  void set_doubles(const std::string& key, const std::vector<double>& vs);
  void set_region(const std::string& prefix, const ConvexRegion& r);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;  // throws Error if absent
  double get_double(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key) const;
  ConvexRegion get_region(const std::string& prefix) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return kv_; }

  std::string to_text() const;
  static Report from_text(const std::string& text);
  static Report load(const std::string& path);  // throws Error if unreadable
  void save(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> kv_;
};

/// %.17g formatting; round-trips doubles exactly through from_text.
std::string format_double(double v);

}  // namespace rotset
