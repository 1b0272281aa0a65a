#pragma once

#include <vector>

#include "qsymlab/bipoly.hpp"

namespace qsymlab {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
BiPoly q_int(int n);
/// [n]_t, same polynomial in the t variable.
BiPoly t_int(int n);
/// [n]_q! = [n]_q [n-1]_q ... [1]_q; [0]_q! = 1.
BiPoly q_factorial(int n);
/// [N]_q! / [k]_q!, computed as the product [k+1]_q ... [N]_q.
BiPoly q_fact_ratio(int N, int k);
/// (q;q)_n = prod_{j=1..n} (1 - q^j).
BiPoly q_pochhammer(int n);
/// Gaussian binomial [n choose k]_q.
BiPoly q_binomial(int n, int k);
/// q-multinomial [n; parts]_q.  The parts must sum to n; the quotient
/// [n]_q!/prod [k_i]_q! is verified to divide exactly.
BiPoly q_multinomial(int n, const std::vector<int>& parts);

}  // namespace qsymlab
