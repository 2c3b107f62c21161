#include "rotset/sl3_random.hpp"

#include <cmath>
#include <cstdlib>

namespace rotset {

IntMatrix3 random_sl3(std::mt19937_64& rng, std::int64_t max_abs, int steps) {
  IntMatrix3 m = IntMatrix3::identity();
  std::uniform_int_distribution<int> pick_row(0, 2);
  std::uniform_int_distribution<int> pick_sign(0, 1);
  for (int s = 0; s < steps; ++s) {
    const int src = pick_row(rng);
    int dst = pick_row(rng);
    const std::int64_t c = pick_sign(rng) ? 1 : -1;
    if (src == dst) continue;
    // Row op dst += c * src keeps the determinant; skip if it leaves bounds.
    std::int64_t trial[3];
    bool ok = true;
    for (int j = 0; j < 3; ++j) {
      trial[j] = m.entry(dst, j) + c * m.entry(src, j);
      ok = ok && std::llabs(trial[j]) <= max_abs;
    }
    if (!ok) continue;
    for (int j = 0; j < 3; ++j) m.entry(dst, j) = trial[j];
  }
  return m;
}

}  // namespace rotset
