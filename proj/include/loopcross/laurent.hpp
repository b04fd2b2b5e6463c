#pragma once

#include <map>

#include "loopcross/common.hpp"

namespace loopcross {

/// Integer-coefficient Laurent polynomial in the formal variable q.
/// No zero coefficients are stored; equality is term-wise.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(long long exp, long long coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
  }
  static LaurentPoly constant(long long c) { return monomial(0, c); }

  const std::map<long long, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.count(0) && terms_.at(0) == 1; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(long long k) const {
    if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative power");
    LaurentPoly r = constant(1);
    for (long long i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Exact evaluation at a positive integer (negative exponents give exact
  /// rationals).
  Rat eval(long long q) const {
    if (q <= 0) throw std::invalid_argument("LaurentPoly::eval: q must be positive");
    Rat acc(0);
    for (auto [e, c] : terms_) {
      Rat t(c);
      for (long long i = 0; i < (e < 0 ? -e : e); ++i) t = e < 0 ? t / Rat(q) : t * Rat(q);
      acc += t;
    }
    return acc;
  }

  /// Deterministic rendering, highest exponent first, e.g. "q^2 - 2 + q^-1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      long long e = it->first, c = it->second;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long long a = c < 0 ? -c : c;
      if (e == 0) {
        s += std::to_string(a);
      } else {
        if (a != 1) s += std::to_string(a) + "*";
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void add_term(long long e, long long c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<long long, long long> terms_;
};

/// (q - 1)^k, the unit-coordinate factor in all the point counts.
inline LaurentPoly q_minus_one_pow(long long k) {
  return (LaurentPoly::monomial(1) - LaurentPoly::constant(1)).pow(k);
}

}  // namespace loopcross
