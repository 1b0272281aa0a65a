#include "qsymlab/qanalog.hpp"

#include <numeric>
#include <stdexcept>

namespace qsymlab {

BiPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
  BiPoly p;
  for (int i = 0; i < n; ++i) p += BiPoly::q(i);
  return p;
}

BiPoly t_int(int n) {
  if (n < 0) throw std::invalid_argument("t_int: n must be nonnegative");
  BiPoly p;
  for (int i = 0; i < n; ++i) p += BiPoly::t(i);
  return p;
}

BiPoly q_factorial(int n) { return q_fact_ratio(n, 0); }

BiPoly q_fact_ratio(int N, int k) {
  if (k < 0 || k > N) throw std::invalid_argument("q_fact_ratio: need 0 <= k <= N");
  BiPoly p(1);
  for (int i = k + 1; i <= N; ++i) p *= q_int(i);
  return p;
}

BiPoly q_pochhammer(int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: n must be nonnegative");
  BiPoly p(1);
  for (int j = 1; j <= n; ++j) p *= BiPoly(1) - BiPoly::q(j);
  return p;
}

BiPoly q_binomial(int n, int k) { return q_multinomial(n, {k, n - k}); }

BiPoly q_multinomial(int n, const std::vector<int>& parts) {
  int total = 0;
  for (int k : parts) {
    if (k < 0) throw std::invalid_argument("q_multinomial: negative part");
    total += k;
  }
  if (total != n) throw std::invalid_argument("q_multinomial: parts do not sum to n");
  BiPoly denom(1);
  for (int k : parts) denom *= q_factorial(k);
  // A nonzero remainder here would mean broken polynomial arithmetic.
  return BiPoly::div_exact_q(q_factorial(n), denom);
}

}  // namespace qsymlab
