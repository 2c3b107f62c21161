#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "rotset/errors.hpp"

namespace rotset {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
  return r;
}

using IntTriple = std::array<std::int64_t, 3>;

/// 3x3 integer matrix, row-major, exact arithmetic throughout.
class IntMatrix3 {
 public:
  IntMatrix3() : e_{} {}
  explicit IntMatrix3(const std::array<std::int64_t, 9>& row_major) : e_(row_major) {}

  static IntMatrix3 identity() { return IntMatrix3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }

  std::int64_t entry(int r, int c) const { return e_[3 * r + c]; }
  std::int64_t& entry(int r, int c) { return e_[3 * r + c]; }
  const std::array<std::int64_t, 9>& entries() const { return e_; }

  std::int64_t determinant() const;

  /// Adjugate-based exact inverse; requires det = +1.
  IntMatrix3 inverse_unimodular() const;

  IntMatrix3 operator*(const IntMatrix3& o) const;
  bool operator==(const IntMatrix3&) const = default;

  std::string to_string() const;

 private:
  std::array<std::int64_t, 9> e_;
};

/// Exact matrix-vector product over Z^3. Overflow throws, never wraps.
IntTriple matrix_apply(const IntMatrix3& m, const IntTriple& t);

}  // namespace rotset
