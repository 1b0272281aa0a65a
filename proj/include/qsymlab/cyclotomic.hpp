#pragma once

#include <optional>

#include "qsymlab/bipoly.hpp"

namespace qsymlab {

/// d-th cyclotomic polynomial in q, from q^d - 1 = prod_{e|d} Phi_e by exact
/// division.  Memoized.
BiPoly cyclotomic(int d);

/// Element of Q[q]/(Phi_d): the canonical remainder mod the d-th cyclotomic
/// polynomial.  Stands in for evaluation at a primitive d-th root of unity.
class CyclotomicElt {
 public:
  CyclotomicElt(int d, const BiPoly& value);

  int modulus() const { return d_; }
  const BiPoly& remainder() const { return rem_; }

  CyclotomicElt operator*(const CyclotomicElt& o) const;
  bool operator==(const CyclotomicElt& o) const { return d_ == o.d_ && rem_ == o.rem_; }

  /// The value as a rational integer, when the remainder is a constant
  /// integer; nullopt otherwise (the evaluation is not an integer).
  std::optional<Int> as_integer() const;

 private:
  int d_;
  BiPoly rem_;
};

inline CyclotomicElt eval_at_root_of_unity(const BiPoly& p, int d) { return {d, p}; }

}  // namespace qsymlab
