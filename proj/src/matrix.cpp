#include "rotset/matrix.hpp"

#include <sstream>

namespace rotset {

namespace {

// 2x2 minor with checked arithmetic.
std::int64_t minor2(const IntMatrix3& m, int r0, int r1, int c0, int c1) {
  return checked_sub(checked_mul(m.entry(r0, c0), m.entry(r1, c1)),
                     checked_mul(m.entry(r0, c1), m.entry(r1, c0)));
}

}  // namespace

std::int64_t IntMatrix3::determinant() const {
  std::int64_t d = 0;
  d = checked_add(d, checked_mul(entry(0, 0), minor2(*this, 1, 2, 1, 2)));
  d = checked_sub(d, checked_mul(entry(0, 1), minor2(*this, 1, 2, 0, 2)));
  d = checked_add(d, checked_mul(entry(0, 2), minor2(*this, 1, 2, 0, 1)));
  return d;
}

IntMatrix3 IntMatrix3::inverse_unimodular() const {
  if (determinant() != 1) {
    throw NotUnimodularError("matrix determinant is not +1: " + to_string());
  }
  // det = 1, so the adjugate is the exact integer inverse.
  IntMatrix3 inv;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      // Cofactor of (c, r); cyclic index order absorbs the sign.
      inv.entry(r, c) = checked_sub(checked_mul(entry(r0, c0), entry(r1, c1)),
                                    checked_mul(entry(r0, c1), entry(r1, c0)));
    }
  }
  return inv;
}

IntMatrix3 IntMatrix3::operator*(const IntMatrix3& o) const {
  IntMatrix3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < 3; ++k) {
        acc = checked_add(acc, checked_mul(entry(i, k), o.entry(k, j)));
      }
      r.entry(i, j) = acc;
    }
  }
  return r;
}

std::string IntMatrix3::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < 3; ++r) {
    os << "[" << entry(r, 0) << "," << entry(r, 1) << "," << entry(r, 2) << "]";
    if (r < 2) os << ",";
  }
  os << "]";
  return os.str();
}

IntTriple matrix_apply(const IntMatrix3& m, const IntTriple& t) {
  IntTriple out{};
  for (int r = 0; r < 3; ++r) {
    std::int64_t acc = 0;
    for (int c = 0; c < 3; ++c) {
      acc = checked_add(acc, checked_mul(m.entry(r, c), t[static_cast<std::size_t>(c)]));
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

}  // namespace rotset
