#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsymlab/rational.hpp"

namespace qsymlab {

/// Sparse bivariate polynomial in q and t with rational coefficients.
///
/// Terms are keyed by (t-exponent, q-exponent) so that map iteration follows
/// the canonical serialization order.  No zero coefficient is ever stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (t_exp, q_exp)
  using TermMap = std::map<Key, Rat>;

  BiPoly() = default;
  explicit BiPoly(long constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
  }
  explicit BiPoly(const Rat& constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
  }

  static BiPoly q(int exp = 1) { return monomial(1, exp, 0); }
  static BiPoly t(int exp = 1) { return monomial(1, 0, exp); }
  static BiPoly monomial(const Rat& coeff, int q_exp, int t_exp);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_q_only() const { return t_degree() <= 0; }
  /// -1 for the zero polynomial.
  int q_degree() const;
  int t_degree() const;

  const TermMap& terms() const { return terms_; }
  Rat coeff(int q_exp, int t_exp) const;
  Rat constant_term() const { return coeff(0, 0); }
  /// Coefficient of t^j as a polynomial in q alone.
  BiPoly coeff_of_t(int j) const;
  /// Coefficients of t^0 .. t^{t_degree} (empty for the zero polynomial).
  std::vector<BiPoly> t_coefficients() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly operator+(const BiPoly& o) const {
    BiPoly r = *this;
    return r += o;
  }
  BiPoly operator-(const BiPoly& o) const {
    BiPoly r = *this;
    return r -= o;
  }
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly& scale(const Rat& c);
  friend BiPoly operator*(const Rat& c, const BiPoly& p) {
    BiPoly r = p;
    return r.scale(c);
  }
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }
  bool operator<(const BiPoly& o) const { return terms_ < o.terms_; }

  BiPoly subst_q(const Rat& value) const;  // polynomial in t
  BiPoly subst_t(const Rat& value) const;  // polynomial in q
  Rat eval(const Rat& q_value, const Rat& t_value) const;

  bool all_coeffs_nonneg() const;
  bool coeffs_are_integers() const;

  /// Dense q-coefficient vector; requires a q-only polynomial.
  std::vector<Rat> q_dense() const;
  static BiPoly from_q_dense(const std::vector<Rat>& coeffs);

  /// Long division of q-only polynomials: returns (quotient, remainder).
  static std::pair<BiPoly, BiPoly> divmod_q(const BiPoly& num, const BiPoly& den);
  /// Exact division; throws std::domain_error on a nonzero remainder.
  static BiPoly div_exact_q(const BiPoly& num, const BiPoly& den);

  /// Canonical text form, grouped by ascending t-exponent:
  /// "1 + (2 + q + q^2)*t + t^2", "q^3*t", "0".
  std::string to_string() const;

 private:
  void add_term(int q_exp, int t_exp, const Rat& c);
  TermMap terms_;
};

}  // namespace qsymlab
