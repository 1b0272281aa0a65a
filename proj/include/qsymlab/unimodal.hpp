#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qsymlab/rational.hpp"

namespace qsymlab {

/// Outcome of the positive/unimodal/palindromic test on a coefficient
/// sequence a_0..a_n.  first_failure is the smallest index whose comparison
/// failed (positivity of a_i, or the rise/fall comparison ending at a_i);
/// -1 when everything passed.
struct UnimodalVerdict {
  bool positive = true;
  bool unimodal = true;
  bool palindromic = true;
  int first_failure = -1;

  bool all() const { return positive && unimodal && palindromic; }
};

template <class T>
bool is_palindromic(const std::vector<T>& a) {
  size_t len = a.size();
  for (size_t i = 0; 2 * i < len; ++i)
    if (!(a[i] == a[len - 1 - i])) return false;
  return true;
}

/// Variant that validates the declared center of symmetry: the sequence is
/// indexed 0..n and must satisfy 2*center = n.
template <class T>
bool is_palindromic(const std::vector<T>& a, const Rat& center) {
  if (a.empty()) return true;
  if (Rat(2) * center != Rat(static_cast<long>(a.size()) - 1))
    throw std::invalid_argument("is_palindromic: center inconsistent with length");
  return is_palindromic(a);
}

/// Checks 0 <= a_0 <= a_1 <= ... <= a_{floor(n/2)}, the mirrored descending
/// chain, and palindromicity, where <= means the difference satisfies the
/// supplied nonnegativity oracle.  The middle comparison of an even-length
/// sequence is covered by palindromicity.  Length 0 or 1 passes trivially.
template <class T, class NonNeg>
UnimodalVerdict check_positive_unimodal(const std::vector<T>& a, NonNeg is_nonneg) {
  UnimodalVerdict v;
  if (a.empty()) return v;
  int n = static_cast<int>(a.size()) - 1;
  v.palindromic = is_palindromic(a);
  auto record = [&v](int idx) {
    if (v.first_failure < 0 || idx < v.first_failure) v.first_failure = idx;
  };
  for (int i = 0; i <= n; ++i) {
    if (!is_nonneg(a[static_cast<size_t>(i)])) {
      v.positive = false;
      record(i);
      break;
    }
  }
  for (int i = 1; i <= n / 2; ++i) {
    if (!is_nonneg(a[static_cast<size_t>(i)] - a[static_cast<size_t>(i - 1)])) {
      v.unimodal = false;
      record(i);
      break;
    }
  }
  for (int i = (n + 1) / 2 + 1; i <= n; ++i) {
    if (!is_nonneg(a[static_cast<size_t>(i - 1)] - a[static_cast<size_t>(i)])) {
      v.unimodal = false;
      record(i);
      break;
    }
  }
  return v;
}

/// Trims leading and trailing all-zero entries, reporting the support window
/// [first, last] so callers can record the detected center of symmetry.
template <class T, class IsZero>
std::vector<T> trim_support(const std::vector<T>& a, IsZero is_zero, int* first, int* last) {
  int lo = 0, hi = static_cast<int>(a.size()) - 1;
  while (lo <= hi && is_zero(a[static_cast<size_t>(lo)])) ++lo;
  while (hi >= lo && is_zero(a[static_cast<size_t>(hi)])) --hi;
  if (first) *first = lo;
  if (last) *last = hi;
  if (lo > hi) return {};
  return std::vector<T>(a.begin() + lo, a.begin() + hi + 1);
}

}  // namespace qsymlab
