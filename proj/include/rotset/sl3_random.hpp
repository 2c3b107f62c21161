#pragma once

#include <cstdint>
#include <random>

#include "rotset/matrix.hpp"

namespace rotset {

/// Random element of SL(3,Z) with entries bounded by max_abs, built as a
/// product of elementary shear matrices (det stays 1 throughout). Steps that
/// would push an entry past the bound are skipped.
IntMatrix3 random_sl3(std::mt19937_64& rng, std::int64_t max_abs = 5, int steps = 24);

}  // namespace rotset
