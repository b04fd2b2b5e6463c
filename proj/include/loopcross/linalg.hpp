#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <optional>

#include "loopcross/common.hpp"

namespace loopcross {

inline IntMat int_identity(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntVec int_mat_vec(const IntMat& a, const IntVec& v) {
  IntVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  IntMat out(m, IntVec(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

inline QVec q_mat_vec(const QMat& a, const QVec& v) {
  QVec out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Exact Gaussian elimination.

struct LinearSolution {
  QVec x;       // one solution (free variables set to zero)
  int rank = 0;
  bool unique = false;  // true iff rank == number of columns
};

/// Solve A x = b over Q. Returns nullopt when inconsistent.
inline std::optional<LinearSolution> solve_linear(QMat a, QVec b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == Rat(0)) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    Rat inv = Rat(1) / a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == Rat(0)) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (b[i] != Rat(0)) return std::nullopt;
  LinearSolution sol;
  sol.rank = static_cast<int>(row);
  sol.unique = (sol.rank == static_cast<int>(n));
  sol.x.assign(n, Rat(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol.x[pivot_col[r]] = b[r];
  return sol;
}

/// Inverse of a square rational matrix; nullopt when singular.
inline std::optional<QMat> q_mat_inverse(QMat a) {
  const std::size_t n = a.size();
  QMat inv(n, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == Rat(0)) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(a[sel], a[col]);
    std::swap(inv[sel], inv[col]);
    Rat f = Rat(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == Rat(0)) continue;
      Rat g = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= g * a[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Smith normal form over Z.

struct SmithForm {
  IntMat left;       // unimodular, m x m
  IntMat right;      // unimodular, n x n
  IntVec divisors;   // min(m,n) entries, nonnegative, d[i] | d[i+1]
  int rank = 0;      // number of nonzero divisors
};

/// left * A * right = diag(divisors). Deterministic for a given input.
inline SmithForm smith_form(IntMat d) {
  const int m = static_cast<int>(d.size());
  const int n = m == 0 ? 0 : static_cast<int>(d[0].size());
  SmithForm out;
  out.left = int_identity(m);
  out.right = int_identity(n);

  auto swap_rows = [&](int a, int b) {
    std::swap(d[a], d[b]);
    std::swap(out.left[a], out.left[b]);
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(d[i][a], d[i][b]);
    for (int i = 0; i < n; ++i) std::swap(out.right[i][a], out.right[i][b]);
  };
  auto add_row = [&](int dst, int src, long long f) {  // row dst += f * row src
    for (int j = 0; j < n; ++j) d[dst][j] += f * d[src][j];
    for (int j = 0; j < m; ++j) out.left[dst][j] += f * out.left[src][j];
  };
  auto add_col = [&](int dst, int src, long long f) {
    for (int i = 0; i < m; ++i) d[i][dst] += f * d[i][src];
    for (int i = 0; i < n; ++i) out.right[i][dst] += f * out.right[i][src];
  };
  auto negate_row = [&](int r) {
    for (int j = 0; j < n; ++j) d[r][j] = -d[r][j];
    for (int j = 0; j < m; ++j) out.left[r][j] = -out.left[r][j];
  };

  int t = 0;
  while (t < m && t < n) {
    // locate the nonzero entry of least magnitude in the trailing block
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        long long v = std::llabs(d[i][j]);
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      if (d[i][t] == 0) continue;
      add_row(i, t, -(d[i][t] / d[t][t]));
      if (d[i][t] != 0) clean = false;  // remainder smaller than pivot
    }
    for (int j = t + 1; j < n; ++j) {
      if (d[t][j] == 0) continue;
      add_col(j, t, -(d[t][j] / d[t][t]));
      if (d[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // re-pick a smaller pivot

    // pivot must divide the whole trailing block
    bool fixed = false;
    for (int i = t + 1; i < m && !fixed; ++i)
      for (int j = t + 1; j < n && !fixed; ++j)
        if (d[i][j] % d[t][t] != 0) {
          add_row(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;

    if (d[t][t] < 0) negate_row(t);
    ++t;
  }

  out.divisors.assign(std::min(m, n), 0);
  for (int i = 0; i < std::min(m, n); ++i) out.divisors[i] = d[i][i];
  out.rank = t;

  // deterministic sign for the free rows of `left`
  for (int i = out.rank; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (out.left[i][j] == 0) continue;
      if (out.left[i][j] < 0)
        for (int k = 0; k < m; ++k) out.left[i][k] = -out.left[i][k];
      break;
    }
  }
  return out;
}

/// Solve A y = t over Z given the Smith form of A. Returns nullopt when there
/// is no integral solution.
inline std::optional<IntVec> solve_integer(const SmithForm& f, const IntVec& t) {
  const int m = static_cast<int>(f.left.size());
  const int n = static_cast<int>(f.right.size());
  IntVec u = int_mat_vec(f.left, t);
  IntVec z(n, 0);
  for (int i = 0; i < m; ++i) {
    long long di = i < static_cast<int>(f.divisors.size()) ? f.divisors[i] : 0;
    if (di == 0) {
      if (u[i] != 0) return std::nullopt;
    } else {
      if (u[i] % di != 0) return std::nullopt;
      if (i < n) z[i] = u[i] / di;
    }
  }
  return int_mat_vec(f.right, z);
}

/// Basis of the integer kernel {v : A v = 0}, as columns.
inline std::vector<IntVec> integer_kernel(const IntMat& a) {
  SmithForm f = smith_form(a);
  const int n = static_cast<int>(f.right.size());
  std::vector<IntVec> basis;
  for (int j = f.rank; j < n; ++j) {
    IntVec col(n);
    for (int i = 0; i < n; ++i) col[i] = f.right[i][j];
    basis.push_back(col);
  }
  return basis;
}

}  // namespace loopcross
