#pragma once

#include <gmpxx.h>

#include <string>

namespace qsymlab {

// Exact arithmetic everywhere: Mobius values, q-factorial ratios and series
// coefficients overflow 64-bit integers already at desk scale.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_nonneg(const Rat& r) { return sgn(r) >= 0; }

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// "a" or "a/b", denominator always positive.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace qsymlab
