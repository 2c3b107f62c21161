#pragma once

#include <cstdint>
#include <string>

#include "rotset/matrix.hpp"

namespace rotset {

/// Canonical form of a composite of the commuting generators S, T, F:
/// the word S^s T^t F^f is determined by its exponent triple. Evaluation
/// law: word(z) = F^f(z) + (s, t).
struct ActionWord {
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t f = 0;

  constexpr bool operator==(const ActionWord&) const = default;
};

inline ActionWord word_s() { return {1, 0, 0}; }
inline ActionWord word_t() { return {0, 1, 0}; }
inline ActionWord word_f() { return {0, 0, 1}; }

/// w1 composed with w2 (order immaterial; the generators commute).
inline ActionWord word_compose(const ActionWord& w1, const ActionWord& w2) {
  return {checked_add(w1.s, w2.s), checked_add(w1.t, w2.t), checked_add(w1.f, w2.f)};
}

inline ActionWord word_inverse(const ActionWord& w) {
  return {checked_sub(0, w.s), checked_sub(0, w.t), checked_sub(0, w.f)};
}

/// w^k by exponent scaling.
inline ActionWord word_pow(const ActionWord& w, std::int64_t k) {
  return {checked_mul(w.s, k), checked_mul(w.t, k), checked_mul(w.f, k)};
}

std::string word_to_string(const ActionWord& w);

}  // namespace rotset
