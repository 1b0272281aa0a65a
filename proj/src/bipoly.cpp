#include "qsymlab/bipoly.hpp"

#include <sstream>

namespace qsymlab {

BiPoly BiPoly::monomial(const Rat& coeff, int q_exp, int t_exp) {
  if (q_exp < 0 || t_exp < 0) throw std::invalid_argument("BiPoly: negative exponent");
  BiPoly p;
  if (coeff != 0) p.terms_[{t_exp, q_exp}] = coeff;
  return p;
}

bool BiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0};
}

int BiPoly::q_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BiPoly::t_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.first;
}

Rat BiPoly::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find({t_exp, q_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

BiPoly BiPoly::coeff_of_t(int j) const {
  BiPoly out;
  for (auto it = terms_.lower_bound({j, 0}); it != terms_.end() && it->first.first == j; ++it)
    out.terms_[{0, it->first.second}] = it->second;
  return out;
}

std::vector<BiPoly> BiPoly::t_coefficients() const {
  std::vector<BiPoly> out;
  int d = t_degree();
  for (int j = 0; j <= d; ++j) out.push_back(coeff_of_t(j));
  return out;
}

void BiPoly::add_term(int q_exp, int t_exp, const Rat& c) {
  if (c == 0) return;
  Key k{t_exp, q_exp};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.second, k.first, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.second, k.first, -c);
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
  return r;
}

BiPoly& BiPoly::scale(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::subst_q(const Rat& value) const {
  BiPoly r;
  for (const auto& [k, c] : terms_) {
    Rat pw = 1;
    for (int i = 0; i < k.second; ++i) pw *= value;
    r.add_term(0, k.first, c * pw);
  }
  return r;
}

BiPoly BiPoly::subst_t(const Rat& value) const {
  BiPoly r;
  for (const auto& [k, c] : terms_) {
    Rat pw = 1;
    for (int i = 0; i < k.first; ++i) pw *= value;
    r.add_term(k.second, 0, c * pw);
  }
  return r;
}

Rat BiPoly::eval(const Rat& q_value, const Rat& t_value) const {
  return subst_q(q_value).subst_t(t_value).constant_term();
}

bool BiPoly::all_coeffs_nonneg() const {
  for (const auto& [k, c] : terms_)
    if (sgn(c) < 0) return false;
  return true;
}

bool BiPoly::coeffs_are_integers() const {
  for (const auto& [k, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

std::vector<Rat> BiPoly::q_dense() const {
  if (!is_q_only()) throw std::domain_error("BiPoly: q_dense on polynomial involving t");
  std::vector<Rat> out(static_cast<size_t>(std::max(q_degree(), -1) + 1), Rat(0));
  for (const auto& [k, c] : terms_) out[static_cast<size_t>(k.second)] = c;
  return out;
}

BiPoly BiPoly::from_q_dense(const std::vector<Rat>& coeffs) {
  BiPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), 0, coeffs[i]);
  return p;
}

std::pair<BiPoly, BiPoly> BiPoly::divmod_q(const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw std::domain_error("BiPoly: division by zero");
  std::vector<Rat> r = num.q_dense();
  std::vector<Rat> d = den.q_dense();
  int dd = static_cast<int>(d.size()) - 1;
  std::vector<Rat> quot;
  if (static_cast<int>(r.size()) - 1 >= dd) quot.assign(r.size() - static_cast<size_t>(dd), Rat(0));
  for (int k = static_cast<int>(r.size()) - 1 - dd; k >= 0; --k) {
    Rat c = r[static_cast<size_t>(k + dd)] / d[static_cast<size_t>(dd)];
    if (c == 0) continue;
    quot[static_cast<size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i) r[static_cast<size_t>(k + i)] -= c * d[static_cast<size_t>(i)];
  }
  return {from_q_dense(quot), from_q_dense(r)};
}

BiPoly BiPoly::div_exact_q(const BiPoly& num, const BiPoly& den) {
  auto [quot, rem] = divmod_q(num, den);
  if (!rem.is_zero()) throw std::domain_error("BiPoly: division not exact");
  return quot;
}

namespace {

std::string term_string(const Rat& c, int q_exp, int t_part_exp, bool with_t) {
  std::string out;
  bool need_coeff = (c != 1) || (q_exp == 0 && !with_t);
  if (need_coeff) out = rat_to_string(c);
  if (q_exp > 0) {
    if (!out.empty()) out += "*";
    out += q_exp == 1 ? "q" : "q^" + std::to_string(q_exp);
  }
  if (with_t) {
    if (!out.empty()) out += "*";
    out += t_part_exp == 1 ? "t" : "t^" + std::to_string(t_part_exp);
  }
  return out;
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  auto append = [&out](const std::string& piece, bool negative) {
    if (out.empty()) {
      out = negative ? "-" + piece : piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  };
  int td = t_degree();
  for (int j = 0; j <= td; ++j) {
    BiPoly cj = coeff_of_t(j);
    if (cj.is_zero()) continue;
    const auto& ts = cj.terms_;
    if (j == 0 || ts.size() == 1) {
      for (const auto& [k, c] : ts) {
        bool neg = sgn(c) < 0;
        append(term_string(neg ? Rat(-c) : c, k.second, j, j > 0), neg);
      }
    } else {
      std::string inner;
      for (const auto& [k, c] : ts) {
        bool neg = sgn(c) < 0;
        std::string piece = term_string(neg ? Rat(-c) : c, k.second, 0, false);
        if (inner.empty())
          inner = neg ? "-" + piece : piece;
        else
          inner += (neg ? " - " : " + ") + piece;
      }
      append("(" + inner + ")*" + (j == 1 ? std::string("t") : "t^" + std::to_string(j)), false);
    }
  }
  return out;
}

}  // namespace qsymlab
