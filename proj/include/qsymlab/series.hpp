#pragma once

#include <stdexcept>
#include <vector>

namespace qsymlab {

/// Formal power series in z truncated at order N: coefficients c_0..c_N in
/// any exact ring T with +, -, * and ==.  Operations never consult
/// coefficients above the truncation order; products of two order-N series
/// are order-N series.
template <class T>
class Series {
 public:
  Series(int order, std::vector<T> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != order_ + 1)
      throw std::invalid_argument("Series: need exactly order+1 coefficients");
  }

  int order() const { return order_; }
  const T& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
  T& operator[](int k) { return c_.at(static_cast<size_t>(k)); }

  Series operator+(const Series& o) const {
    check(o);
    Series r = *this;
    for (int k = 0; k <= order_; ++k) r[k] = r[k] + o[k];
    return r;
  }

  Series operator-(const Series& o) const {
    check(o);
    Series r = *this;
    for (int k = 0; k <= order_; ++k) r[k] = r[k] - o[k];
    return r;
  }

  Series operator*(const Series& o) const {
    check(o);
    std::vector<T> out;
    out.reserve(static_cast<size_t>(order_) + 1);
    for (int n = 0; n <= order_; ++n) {
      T acc = c_[0] * o[n];
      for (int a = 1; a <= n; ++a) acc = acc + c_[static_cast<size_t>(a)] * o[n - a];
      out.push_back(std::move(acc));
    }
    return Series(order_, std::move(out));
  }

  template <class S>
  Series scaled(const S& factor) const {
    Series r = *this;
    for (int k = 0; k <= order_; ++k) r[k] = r[k] * factor;
    return r;
  }

  bool operator==(const Series& o) const { return order_ == o.order_ && c_ == o.c_; }

  /// Index of the first differing coefficient, or -1 when equal.
  int first_mismatch(const Series& o) const {
    check(o);
    for (int k = 0; k <= order_; ++k)
      if (!(c_[static_cast<size_t>(k)] == o[k])) return k;
    return -1;
  }

 private:
  void check(const Series& o) const {
    if (order_ != o.order_) throw std::invalid_argument("Series: truncation order mismatch");
  }

  int order_;
  std::vector<T> c_;
};

}  // namespace qsymlab
