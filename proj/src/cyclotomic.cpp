#include "qsymlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qsymlab {

BiPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
  static std::map<int, BiPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // Fill bottom-up over the divisors of d; divisors of e ( <= e ) are done
  // by the time e is reached.
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0 || cache.count(e)) continue;
    if (e == 1) {
      cache.emplace(1, BiPoly::q(1) - BiPoly(1));
      continue;
    }
    BiPoly num = BiPoly::q(e) - BiPoly(1);
    BiPoly denom(1);
    for (int f = 1; f < e; ++f)
      if (e % f == 0) denom *= cache.at(f);
    cache.emplace(e, BiPoly::div_exact_q(num, denom));
  }
  return cache.at(d);
}

CyclotomicElt::CyclotomicElt(int d, const BiPoly& value) : d_(d) {
  if (!value.is_q_only()) throw std::invalid_argument("CyclotomicElt: value must not involve t");
  rem_ = BiPoly::divmod_q(value, cyclotomic(d)).second;
}

CyclotomicElt CyclotomicElt::operator*(const CyclotomicElt& o) const {
  if (d_ != o.d_) throw std::invalid_argument("CyclotomicElt: modulus mismatch");
  return {d_, rem_ * o.rem_};
}

std::optional<Int> CyclotomicElt::as_integer() const {
  if (rem_.is_zero()) return Int(0);
  if (!rem_.is_constant()) return std::nullopt;
  Rat c = rem_.constant_term();
  if (c.get_den() != 1) return std::nullopt;
  return c.get_num();
}

}  // namespace qsymlab
