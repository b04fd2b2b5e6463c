#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "loopcross/common.hpp"
#include "loopcross/linalg.hpp"

namespace loopcross {

/// A Weyl group element as a word in simple reflections (0-based indices).
/// The empty word is the identity; words act on vectors rightmost letter
/// first, so word {a, b} sends v to s_a(s_b(v)).
using WeylWord = std::vector<int>;

/// Based root datum with a diagram automorphism acting on the lattices.
///
/// The cocharacter lattice X_* and character lattice X^* are both presented
/// as Z^rank; `pairing` gives <,> : X_* x X^* -> Z (identity for all shipped
/// presets, but kept explicit). Everything below `orbit_reps` is derived at
/// construction time; the struct is immutable afterwards and all operations
/// on it are pure, so concurrent readers are fine.
struct RootDatum {
  std::string name;
  int rank = 0;         // n
  int num_simple = 0;   // number of simple roots
  std::vector<IntVec> simple_roots;    // in X^*
  std::vector<IntVec> simple_coroots;  // in X_*
  IntMat pairing;                      // n x n
  std::vector<int> sigma_perm;         // diagram automorphism on {0..num_simple-1}
  IntMat sigma_cochar;                 // action on X_*
  std::vector<int> orbit_reps;         // one simple index per sigma-orbit

  // -- derived --
  IntMat sigma_char;                   // action on X^* (pairing-compatible)
  int sigma_order = 1;
  IntMat cartan;                       // cartan[i][j] = <coroot_i, root_j>
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;           // simple index -> orbit index
  std::vector<IntVec> pairing_root;    // pairing * root_j  (so <v,a_j> = v . pairing_root[j])
  std::vector<IntVec> coroot_pairing;  // coroot_i^T * pairing
  std::vector<QVec> fundamental_weights;  // per simple root, inside the root span
  std::vector<Charv> orbit_weights_;      // per orbit: sum over the orbit
  std::vector<IntVec> orbit_coroot_sum;   // per orbit: sum of coroots in the orbit
  IntMat folded_pairing;               // [j][i] = <orbit_coroot_sum[i], root_{rep_j}>
  std::vector<IntVec> positive_roots;             // X^* coords
  std::vector<IntVec> positive_root_simple_coords;
  std::vector<IntMat> weyl_actions;    // every Weyl element as a matrix on X_*
  SmithForm kottwitz_form;             // of [coroots | 1 - sigma]
  IntVec kottwitz_moduli;              // per retained row; 0 marks a free factor
  std::vector<int> kottwitz_rows;      // retained row indices of kottwitz_form.left
  std::vector<IntVec> central_basis;   // basis of {v in X_* : <v, a_j> = 0 for all j}
  QMat span_coords;                    // inverse of [central_basis | simple_coroots]

  int num_orbits() const { return static_cast<int>(orbit_reps.size()); }
};

// ---------------------------------------------------------------------------
// Pairings and actions.

inline Rat pairing_with_root(const RootDatum& d, const Cochar& v, int j) {
  Rat acc(0);
  for (int k = 0; k < d.rank; ++k) acc += v[k] * Rat(d.pairing_root[j][k]);
  return acc;
}

inline long long pairing_with_root_int(const RootDatum& d, const IntVec& v, int j) {
  long long acc = 0;
  for (int k = 0; k < d.rank; ++k) acc += v[k] * d.pairing_root[j][k];
  return acc;
}

inline Rat pairing_with_coroot(const RootDatum& d, int i, const Charv& x) {
  Rat acc(0);
  for (int k = 0; k < d.rank; ++k) acc += Rat(d.coroot_pairing[i][k]) * x[k];
  return acc;
}

/// <v, x> for v in X_* and x in X^*.
inline Rat pair(const RootDatum& d, const Cochar& v, const Charv& x) {
  Rat acc(0);
  for (int i = 0; i < d.rank; ++i) {
    if (v[i] == Rat(0)) continue;
    Rat row(0);
    for (int j = 0; j < d.rank; ++j) row += Rat(d.pairing[i][j]) * x[j];
    acc += v[i] * row;
  }
  return acc;
}

inline Cochar reflect(const RootDatum& d, int j, const Cochar& v) {
  Rat coef = pairing_with_root(d, v, j);
  Cochar out = v;
  for (int k = 0; k < d.rank; ++k) out[k] -= coef * Rat(d.simple_coroots[j][k]);
  return out;
}

inline Charv reflect(const RootDatum& d, int j, const Charv& x) {
  Rat coef = pairing_with_coroot(d, j, x);
  Charv out = x;
  for (int k = 0; k < d.rank; ++k) out[k] -= coef * Rat(d.simple_roots[j][k]);
  return out;
}

inline void reflect_int_inplace(const RootDatum& d, int j, IntVec& v) {
  long long coef = pairing_with_root_int(d, v, j);
  for (int k = 0; k < d.rank; ++k) v[k] -= coef * d.simple_coroots[j][k];
}

inline void validate_word(const RootDatum& d, const WeylWord& w) {
  for (int j : w)
    if (j < 0 || j >= d.num_simple)
      throw std::invalid_argument(d.name + ": reflection index out of range");
}

template <Side S>
SidedVec<S> act_word(const RootDatum& d, const WeylWord& w, SidedVec<S> v) {
  validate_word(d, w);
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect(d, *it, v);
  return v;
}

inline Cochar act_sigma(const RootDatum& d, const Cochar& v) {
  Cochar out;
  out.c.assign(d.rank, Rat(0));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) out[i] += Rat(d.sigma_cochar[i][j]) * v[j];
  return out;
}

inline Charv act_sigma(const RootDatum& d, const Charv& x) {
  Charv out;
  out.c.assign(d.rank, Rat(0));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) out[i] += Rat(d.sigma_char[i][j]) * x[j];
  return out;
}

/// Matrix of the word's action on X_*.
inline IntMat word_matrix(const RootDatum& d, const WeylWord& w) {
  validate_word(d, w);
  IntMat m = int_identity(d.rank);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    // m <- S_j * m, applied by reflecting each column
    int j = *it;
    for (int col = 0; col < d.rank; ++col) {
      IntVec v(d.rank);
      for (int rowi = 0; rowi < d.rank; ++rowi) v[rowi] = m[rowi][col];
      reflect_int_inplace(d, j, v);
      for (int rowi = 0; rowi < d.rank; ++rowi) m[rowi][col] = v[rowi];
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Datum-level queries.

inline const std::vector<std::vector<int>>& sigma_orbits(const RootDatum& d) {
  return d.orbits;
}

/// omega_i: the sum of fundamental weights over the i-th sigma-orbit.
/// Satisfies <coroot_j, omega_i> = 1 exactly when j lies in orbit i, and is
/// sigma-invariant.
inline const Charv& orbit_weight(const RootDatum& d, int i) {
  if (i < 0 || i >= d.num_orbits()) throw std::invalid_argument("orbit index out of range");
  return d.orbit_weights_[i];
}

/// sigma-Coxeter word: one reflection per orbit, in orbit order.
inline WeylWord coxeter_element(const RootDatum& d) {
  return WeylWord(d.orbit_reps.begin(), d.orbit_reps.end());
}

inline bool is_dominant(const RootDatum& d, const Cochar& v) {
  for (int j = 0; j < d.num_simple; ++j)
    if (pairing_with_root(d, v, j) < Rat(0)) return false;
  return true;
}

/// The unique dominant Weyl conjugate, together with a word sending the input
/// to it.
inline std::pair<Cochar, WeylWord> dominant_representative(const RootDatum& d, Cochar v) {
  WeylWord applied;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j < d.num_simple; ++j) {
      if (pairing_with_root(d, v, j) < Rat(0)) {
        v = reflect(d, j, v);
        applied.push_back(j);
        moved = true;
      }
    }
  }
  std::reverse(applied.begin(), applied.end());
  return {v, applied};
}

/// sigma-average of a cocharacter (the Newton point of the translation by it
/// when it is dominant).
inline Cochar sigma_average(const RootDatum& d, const Cochar& v) {
  Cochar acc = v;
  Cochar cur = v;
  for (int k = 1; k < d.sigma_order; ++k) {
    cur = act_sigma(d, cur);
    acc = acc + cur;
  }
  return Rat(1, d.sigma_order) * acc;
}

inline int positive_root_index(const RootDatum& d, const IntVec& root) {
  for (std::size_t i = 0; i < d.positive_roots.size(); ++i)
    if (d.positive_roots[i] == root) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Preset construction.

namespace detail {

inline Rat q_det(QMat a) {
  const std::size_t n = a.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == Rat(0)) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == Rat(0)) continue;
      Rat f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

inline void validate_cartan(const IntMat& c, const std::string& name) {
  const int l = static_cast<int>(c.size());
  for (int i = 0; i < l; ++i) {
    if (c[i][i] != 2) throw std::invalid_argument(name + ": Cartan diagonal must be 2");
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw std::invalid_argument(name + ": positive off-diagonal Cartan entry");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw std::invalid_argument(name + ": Cartan zero pattern not symmetric");
    }
  }
  // finite type: every leading principal minor is positive
  for (int k = 1; k <= l; ++k) {
    QMat sub(k, QVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = Rat(c[i][j]);
    if (q_det(std::move(sub)) <= Rat(0))
      throw std::invalid_argument(name + ": Cartan matrix is not of finite type");
  }
}

inline void finish_datum(RootDatum& d) {
  const int n = d.rank;
  const int l = d.num_simple;

  if (static_cast<int>(d.sigma_perm.size()) != l)
    throw std::invalid_argument(d.name + ": sigma_perm size mismatch");

  d.cartan.assign(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      long long acc = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) acc += d.simple_coroots[i][a] * d.pairing[a][b] * d.simple_roots[j][b];
      d.cartan[i][j] = acc;
    }
  validate_cartan(d.cartan, d.name);

  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (d.cartan[d.sigma_perm[i]][d.sigma_perm[j]] != d.cartan[i][j])
        throw std::invalid_argument(d.name + ": twist is not a diagram automorphism");

  // derived sigma action on X^*: the adjoint of sigma_cochar^{-1} w.r.t. the pairing
  {
    QMat p(n, QVec(n)), s(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        p[i][j] = Rat(d.pairing[i][j]);
        s[i][j] = Rat(d.sigma_cochar[i][j]);
      }
    auto sinv = q_mat_inverse(s);
    auto pinv = q_mat_inverse(p);
    if (!sinv || !pinv) throw std::invalid_argument(d.name + ": singular sigma or pairing matrix");
    // sigma_char = P^{-1} (sigma^{-1})^T P
    QMat st(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) st[i][j] = (*sinv)[j][i];
    QMat tmp(n, QVec(n, Rat(0))), res(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) tmp[i][j] += (*pinv)[i][k] * st[k][j];
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) res[i][j] += tmp[i][k] * p[k][j];
    d.sigma_char.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!rat_is_integer(res[i][j]))
          throw std::invalid_argument(d.name + ": twist does not preserve the character lattice");
        d.sigma_char[i][j] = res[i][j].numerator();
      }
  }

  // sigma permutes the simple coroots and roots per sigma_perm
  for (int i = 0; i < l; ++i) {
    if (int_mat_vec(d.sigma_cochar, d.simple_coroots[i]) != d.simple_coroots[d.sigma_perm[i]])
      throw std::invalid_argument(d.name + ": sigma_lattice does not permute coroots as declared");
    if (int_mat_vec(d.sigma_char, d.simple_roots[i]) != d.simple_roots[d.sigma_perm[i]])
      throw std::invalid_argument(d.name + ": sigma does not permute roots as declared");
  }

  // order of sigma
  {
    IntMat id = int_identity(n), cur = d.sigma_cochar;
    int ord = 1;
    while (cur != id) {
      cur = int_mat_mul(cur, d.sigma_cochar);
      if (++ord > 24) throw std::invalid_argument(d.name + ": sigma_lattice has unreasonable order");
    }
    d.sigma_order = ord;
  }

  // orbits of sigma_perm, represented by their least element, ordered by it
  {
    std::vector<bool> seen(l, false);
    for (int i = 0; i < l; ++i) {
      if (seen[i]) continue;
      std::vector<int> orb;
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        orb.push_back(j);
        j = d.sigma_perm[j];
      }
      std::sort(orb.begin(), orb.end());
      d.orbits.push_back(orb);
    }
    std::sort(d.orbits.begin(), d.orbits.end());
    d.orbit_reps.clear();
    d.orbit_of.assign(l, -1);
    for (std::size_t k = 0; k < d.orbits.size(); ++k) {
      d.orbit_reps.push_back(d.orbits[k][0]);
      for (int j : d.orbits[k]) d.orbit_of[j] = static_cast<int>(k);
    }
  }

  d.pairing_root.resize(l);
  d.coroot_pairing.resize(l);
  for (int j = 0; j < l; ++j) {
    d.pairing_root[j].assign(n, 0);
    d.coroot_pairing[j].assign(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        d.pairing_root[j][a] += d.pairing[a][b] * d.simple_roots[j][b];
        d.coroot_pairing[j][b] += d.simple_coroots[j][a] * d.pairing[a][b];
      }
  }

  // fundamental weights inside the rational root span: omega_j = sum_k (C^{-1})_{kj} root_k
  {
    QMat c(l, QVec(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) c[i][j] = Rat(d.cartan[i][j]);
    auto cinv = l > 0 ? q_mat_inverse(c) : std::optional<QMat>(QMat{});
    if (!cinv) throw std::invalid_argument(d.name + ": Cartan matrix singular");
    d.fundamental_weights.assign(l, QVec(n, Rat(0)));
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) {
        Rat coef = (*cinv)[k][j];
        for (int a = 0; a < n; ++a) d.fundamental_weights[j][a] += coef * Rat(d.simple_roots[k][a]);
      }
    d.orbit_weights_.clear();
    for (const auto& orb : d.orbits) {
      Charv w;
      w.c.assign(n, Rat(0));
      for (int j : orb)
        for (int a = 0; a < n; ++a) w[a] += d.fundamental_weights[j][a];
      d.orbit_weights_.push_back(std::move(w));
    }
  }

  d.orbit_coroot_sum.clear();
  for (const auto& orb : d.orbits) {
    IntVec s(n, 0);
    for (int j : orb)
      for (int a = 0; a < n; ++a) s[a] += d.simple_coroots[j][a];
    d.orbit_coroot_sum.push_back(std::move(s));
  }
  {
    const int r = d.num_orbits();
    d.folded_pairing.assign(r, IntVec(r, 0));
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i)
        d.folded_pairing[j][i] = pairing_with_root_int(d, d.orbit_coroot_sum[i], d.orbit_reps[j]);
  }

  // positive roots: close the simple roots under simple reflections
  {
    std::set<IntVec> all;
    std::vector<IntVec> queue = d.simple_roots;
    for (const auto& rt : queue) all.insert(rt);
    while (!queue.empty()) {
      IntVec rt = queue.back();
      queue.pop_back();
      for (int j = 0; j < l; ++j) {
        long long coef = 0;
        for (int k = 0; k < n; ++k) coef += d.coroot_pairing[j][k] * rt[k];
        IntVec img = rt;
        for (int k = 0; k < n; ++k) img[k] -= coef * d.simple_roots[j][k];
        if (all.insert(img).second) queue.push_back(img);
      }
    }
    // keep those with nonnegative simple-root coordinates
    QMat rootmat(n, QVec(l));
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < l; ++j) rootmat[a][j] = Rat(d.simple_roots[j][a]);
    std::vector<std::pair<long long, std::pair<IntVec, IntVec>>> pos;  // (height, (root, coords))
    for (const auto& rt : all) {
      QVec rhs = to_qvec(rt);
      auto sol = solve_linear(rootmat, rhs);
      if (!sol) throw std::invalid_argument(d.name + ": root outside the simple-root span");
      IntVec coords(l);
      bool nonneg = true;
      long long height = 0;
      for (int j = 0; j < l; ++j) {
        if (!rat_is_integer(sol->x[j])) throw std::invalid_argument(d.name + ": non-integral root coordinates");
        coords[j] = sol->x[j].numerator();
        if (coords[j] < 0) nonneg = false;
        height += coords[j];
      }
      if (nonneg) pos.push_back({height, {rt, coords}});
    }
    std::sort(pos.begin(), pos.end());
    for (auto& e : pos) {
      d.positive_roots.push_back(e.second.first);
      d.positive_root_simple_coords.push_back(e.second.second);
    }
  }

  // all Weyl elements, as matrices on X_*
  {
    std::set<IntMat> seen;
    std::vector<IntMat> queue;
    IntMat id = int_identity(n);
    seen.insert(id);
    queue.push_back(id);
    std::vector<IntMat> gens;
    for (int j = 0; j < l; ++j) gens.push_back(word_matrix(d, WeylWord{j}));
    while (!queue.empty()) {
      IntMat cur = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        IntMat nxt = int_mat_mul(g, cur);
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
      if (seen.size() > 40320) throw std::invalid_argument(d.name + ": Weyl group too large");
    }
    d.weyl_actions.assign(seen.begin(), seen.end());
  }

  // presentation of X_* / (Z Phi^vee + (1 - sigma) X_*)
  {
    IntMat cols(n, IntVec(l + n, 0));
    for (int j = 0; j < l; ++j)
      for (int a = 0; a < n; ++a) cols[a][j] = d.simple_coroots[j][a];
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a) cols[a][l + j] = (a == j ? 1 : 0) - d.sigma_cochar[a][j];
    d.kottwitz_form = smith_form(cols);
    d.kottwitz_rows.clear();
    d.kottwitz_moduli.clear();
    for (int i = 0; i < n; ++i) {
      long long di = i < static_cast<int>(d.kottwitz_form.divisors.size()) ? d.kottwitz_form.divisors[i] : 0;
      if (di == 1) continue;  // trivial factor
      d.kottwitz_rows.push_back(i);
      d.kottwitz_moduli.push_back(di);
    }
  }

  // central cocharacters and coordinates relative to (center + coroot span)
  {
    if (l == 0) {
      d.central_basis.clear();
      for (int j = 0; j < n; ++j) {
        IntVec e(n, 0);
        e[j] = 1;
        d.central_basis.push_back(e);
      }
    } else {
      IntMat rows(l, IntVec(n));
      for (int j = 0; j < l; ++j) rows[j] = d.pairing_root[j];
      d.central_basis = integer_kernel(rows);
    }
    const int z = static_cast<int>(d.central_basis.size());
    if (z + l != n) throw std::invalid_argument(d.name + ": center dimension inconsistent with rank");
    QMat basis(n, QVec(n));
    for (int a = 0; a < n; ++a) {
      for (int j = 0; j < z; ++j) basis[a][j] = Rat(d.central_basis[j][a]);
      for (int j = 0; j < l; ++j) basis[a][z + j] = Rat(d.simple_coroots[j][a]);
    }
    auto inv = q_mat_inverse(basis);
    if (!inv) throw std::invalid_argument(d.name + ": degenerate lattice decomposition");
    d.span_coords = *inv;
  }
}

inline IntMat cartan_matrix(char series, int l, const std::string& name) {
  IntMat c(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'B':
      if (l < 2) throw std::invalid_argument(name + ": rank too small for series B");
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      c[l - 1][l - 2] = -2;  // short last node
      break;
    case 'C':
      if (l < 2) throw std::invalid_argument(name + ": rank too small for series C");
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      c[l - 2][l - 1] = -2;  // long last node
      break;
    case 'D':
      if (l != 4) throw std::invalid_argument(name + ": only D4 is shipped");
      link(0, 1);
      link(1, 2);
      link(1, 3);
      break;
    case 'G':
      if (l != 2) throw std::invalid_argument(name + ": series G has rank 2");
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    case 'F':
      if (l != 4) throw std::invalid_argument(name + ": series F has rank 4");
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;
      break;
    default:
      throw std::invalid_argument(name + ": unknown series");
  }
  return c;
}

/// Semisimple datum from a Cartan matrix. Simply connected presentation puts
/// X_* in coroot coordinates; adjoint puts it in coweight coordinates.
inline RootDatum semisimple_datum(const std::string& name, const IntMat& cartan, bool adjoint,
                                  std::vector<int> perm) {
  const int l = static_cast<int>(cartan.size());
  RootDatum d;
  d.name = name;
  d.rank = l;
  d.num_simple = l;
  d.pairing = int_identity(l);
  d.simple_roots.assign(l, IntVec(l, 0));
  d.simple_coroots.assign(l, IntVec(l, 0));
  for (int j = 0; j < l; ++j) {
    if (adjoint) {
      d.simple_roots[j][j] = 1;                                   // X^* in root coords
      for (int k = 0; k < l; ++k) d.simple_coroots[j][k] = cartan[j][k];
    } else {
      d.simple_coroots[j][j] = 1;                                 // X_* in coroot coords
      for (int k = 0; k < l; ++k) d.simple_roots[j][k] = cartan[k][j];
    }
  }
  d.sigma_perm = perm;
  d.sigma_cochar.assign(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i) d.sigma_cochar[perm[i]][i] = 1;
  finish_datum(d);
  return d;
}

inline RootDatum gl_datum(int n) {
  RootDatum d;
  d.name = "GL" + std::to_string(n);
  d.rank = n;
  d.num_simple = n - 1;
  d.pairing = int_identity(n);
  for (int i = 0; i + 1 < n; ++i) {
    IntVec v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    d.simple_roots.push_back(v);
    d.simple_coroots.push_back(v);
  }
  d.sigma_perm.assign(std::max(n - 1, 0), 0);
  std::iota(d.sigma_perm.begin(), d.sigma_perm.end(), 0);
  d.sigma_cochar = int_identity(n);
  finish_datum(d);
  return d;
}

}  // namespace detail

/// Names accepted by build_root_datum.
inline const std::vector<std::string>& known_presets() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (int n = 1; n <= 6; ++n) v.push_back("GL" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) v.push_back("SL" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) v.push_back("PGL" + std::to_string(n));
    for (const std::string base :
         {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"}) {
      v.push_back(base);
      if (base != "G2" && base != "F4") v.push_back(base + "ad");
    }
    for (const std::string base : {"2A2", "2A3", "2A4", "2D4", "3D4"}) {
      v.push_back(base);
      v.push_back(base + "ad");
    }
    return v;
  }();
  return names;
}

/// Construct a shipped preset. Supported names:
///   GL1..GL6, SL2..SL5, PGL2..PGL5,
///   A1..A4, B2..B4, C2..C4, D4, G2, F4        (simply connected; "ad" suffix
///                                              for the adjoint form),
///   2A2..2A4, 2D4, 3D4                         (twisted, simply connected;
///                                              "ad" suffix as above).
inline RootDatum build_root_datum(const std::string& name) {
  auto parse_int = [&](const std::string& s) -> int {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("unknown preset: " + name);
    return std::stoi(s);
  };

  if (name.rfind("GL", 0) == 0) {
    int n = parse_int(name.substr(2));
    if (n < 1 || n > 6) throw std::invalid_argument("unknown preset: " + name);
    return detail::gl_datum(n);
  }

  bool adjoint = false;
  std::string base = name;
  if (base.size() > 2 && base.substr(base.size() - 2) == "ad") {
    adjoint = true;
    base = base.substr(0, base.size() - 2);
  }

  if (base.rfind("SL", 0) == 0) {
    int n = parse_int(base.substr(2));
    if (n < 2 || n > 5 || adjoint) throw std::invalid_argument("unknown preset: " + name);
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 0);
    return detail::semisimple_datum(name, detail::cartan_matrix('A', n - 1, name), false, perm);
  }
  if (base.rfind("PGL", 0) == 0) {
    int n = parse_int(base.substr(3));
    if (n < 2 || n > 5 || adjoint) throw std::invalid_argument("unknown preset: " + name);
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 0);
    return detail::semisimple_datum(name, detail::cartan_matrix('A', n - 1, name), true, perm);
  }

  int twist = 1;
  if (!base.empty() && (base[0] == '2' || base[0] == '3')) {
    twist = base[0] - '0';
    base = base.substr(1);
  }
  if (base.size() < 2) throw std::invalid_argument("unknown preset: " + name);
  char series = base[0];
  int l = parse_int(base.substr(1));
  if (l < 1 || l > 4) throw std::invalid_argument("unknown preset: " + name);

  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  if (twist == 2) {
    if (series == 'A' && l >= 2) {
      for (int i = 0; i < l; ++i) perm[i] = l - 1 - i;
    } else if (series == 'D' && l == 4) {
      std::swap(perm[2], perm[3]);
    } else {
      throw std::invalid_argument(name + ": no order-2 diagram automorphism for this type");
    }
  } else if (twist == 3) {
    if (series == 'D' && l == 4) {
      perm = {2, 1, 3, 0};  // rotate the three outer nodes
    } else {
      throw std::invalid_argument(name + ": no order-3 diagram automorphism for this type");
    }
  }
  return detail::semisimple_datum(name, detail::cartan_matrix(series, l, name), adjoint, perm);
}

}  // namespace loopcross
