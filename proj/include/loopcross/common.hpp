#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopcross {

/// Exact rational scalar. All arithmetic in the library is exact; there is
/// no floating point anywhere.
using Rat = boost::rational<long long>;

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

/// Thrown when an operation requires matching Kottwitz points and the inputs
/// disagree (e.g. a stratum query for a class that misses the cross-section).
struct kappa_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by the finite-field oracle when a decision would need coefficients
/// at or beyond the truncation level.
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long rat_floor(const Rat& x) {
  long long q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

inline long long rat_ceil(const Rat& x) { return -rat_floor(-x); }

inline bool rat_is_integer(const Rat& x) { return x.denominator() == 1; }

/// "p/q" formatting; integers print without the denominator.
inline std::string rat_str(const Rat& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

inline QVec to_qvec(const IntVec& v) {
  QVec out;
  out.reserve(v.size());
  for (long long a : v) out.emplace_back(a);
  return out;
}

inline bool is_integral(const QVec& v) {
  for (const Rat& x : v)
    if (!rat_is_integer(x)) return false;
  return true;
}

inline IntVec to_intvec(const QVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    if (!rat_is_integer(x)) throw std::invalid_argument("vector is not integral");
    out.push_back(x.numerator());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sided vectors.
//
// Cocharacters and characters live in dual lattices and must never be mixed;
// the side is part of the type so that mixing fails to compile.

enum class Side { cocharacter, character };

template <Side S>
struct SidedVec {
  QVec c;

  SidedVec() = default;
  explicit SidedVec(QVec coords) : c(std::move(coords)) {}
  explicit SidedVec(const IntVec& coords) : c(to_qvec(coords)) {}

  std::size_t size() const { return c.size(); }
  const Rat& operator[](std::size_t i) const { return c[i]; }
  Rat& operator[](std::size_t i) { return c[i]; }

  bool integral() const { return is_integral(c); }

  friend SidedVec operator+(const SidedVec& a, const SidedVec& b) {
    SidedVec r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend SidedVec operator-(const SidedVec& a, const SidedVec& b) {
    SidedVec r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend SidedVec operator*(const Rat& s, const SidedVec& a) {
    SidedVec r = a;
    for (Rat& x : r.c) x *= s;
    return r;
  }
  friend bool operator==(const SidedVec& a, const SidedVec& b) { return a.c == b.c; }
  friend bool operator<(const SidedVec& a, const SidedVec& b) { return a.c < b.c; }
};

/// Element of X_* (cocharacter lattice), rational coordinates.
using Cochar = SidedVec<Side::cocharacter>;
/// Element of X^* (character lattice), rational coordinates.
using Charv = SidedVec<Side::character>;

inline std::string vec_str(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

template <Side S>
std::string vec_str(const SidedVec<S>& v) {
  return vec_str(v.c);
}

}  // namespace loopcross
