#pragma once

#include <map>
#include <set>
#include <tuple>

#include "loopcross/root_datum.hpp"

namespace loopcross {

/// Value in pi_1(G)_sigma = X_* / (Z Phi^vee + (1-sigma) X_*), presented by
/// the invariant factors of the datum's fixed Smith form. `moduli[k] == 0`
/// marks a free factor; residues of torsion factors are reduced.
struct KottwitzClass {
  IntVec residues;
  IntVec moduli;

  friend bool operator==(const KottwitzClass& a, const KottwitzClass& b) {
    return a.residues == b.residues && a.moduli == b.moduli;
  }
  friend bool operator<(const KottwitzClass& a, const KottwitzClass& b) {
    return a.residues < b.residues;
  }
};

/// Invariant pair of a sigma-conjugacy class: Kottwitz point and dominant
/// sigma-invariant Newton point.
struct SigmaClass {
  KottwitzClass kappa;
  Cochar nu;

  friend bool operator==(const SigmaClass& a, const SigmaClass& b) {
    return a.kappa == b.kappa && a.nu == b.nu;
  }
  friend bool operator<(const SigmaClass& a, const SigmaClass& b) {
    if (a.kappa.residues != b.kappa.residues) return a.kappa.residues < b.kappa.residues;
    return a.nu < b.nu;
  }
};

inline KottwitzClass kottwitz_point_int(const RootDatum& d, const IntVec& lam) {
  IntVec y = int_mat_vec(d.kottwitz_form.left, lam);
  KottwitzClass k;
  k.moduli = d.kottwitz_moduli;
  for (std::size_t t = 0; t < d.kottwitz_rows.size(); ++t) {
    long long v = y[d.kottwitz_rows[t]];
    long long m = d.kottwitz_moduli[t];
    if (m != 0) v = ((v % m) + m) % m;
    k.residues.push_back(v);
  }
  return k;
}

/// Image of an integral cocharacter in pi_1(G)_sigma.
inline KottwitzClass kottwitz_point(const RootDatum& d, const Cochar& lam) {
  if (!lam.integral()) throw std::invalid_argument("kottwitz_point: non-integral cocharacter");
  return kottwitz_point_int(d, to_intvec(lam.c));
}

/// Newton point of the representative pi^lam * w: the (w sigma)-average of
/// lam, made dominant. Always sigma-invariant.
inline Cochar newton_point(const RootDatum& d, const Cochar& lam, const WeylWord& w) {
  if (!lam.integral()) throw std::invalid_argument("newton_point: non-integral cocharacter");
  IntMat a = int_mat_mul(word_matrix(d, w), d.sigma_cochar);
  IntMat id = int_identity(d.rank);
  IntVec cur = to_intvec(lam.c);
  IntVec acc = cur;
  IntMat pw = a;
  int order = 1;
  while (pw != id) {
    cur = int_mat_vec(a, cur);
    for (int i = 0; i < d.rank; ++i) acc[i] += cur[i];
    pw = int_mat_mul(pw, a);
    if (++order > 20000) throw std::logic_error("newton_point: action order overflow");
  }
  Cochar avg;
  avg.c.reserve(d.rank);
  for (int i = 0; i < d.rank; ++i) avg.c.emplace_back(acc[i], order);
  return dominant_representative(d, avg).first;
}

/// Orbits on which a dominant Newton point pairs strictly positively.
inline std::vector<int> newton_support(const RootDatum& d, const Cochar& nu) {
  std::vector<int> out;
  for (int i = 0; i < d.num_orbits(); ++i)
    if (pairing_with_root(d, nu, d.orbit_reps[i]) > Rat(0)) out.push_back(i);
  return out;
}

/// Coordinates of a cocharacter with respect to (central basis | simple
/// coroots). First block: center; second block: coroot coefficients.
inline QVec span_coordinates(const RootDatum& d, const Cochar& v) {
  return q_mat_vec(d.span_coords, v.c);
}

inline bool in_coroot_span(const RootDatum& d, const Cochar& v) {
  QVec coords = span_coordinates(d, v);
  const int z = static_cast<int>(d.central_basis.size());
  for (int k = 0; k < z; ++k)
    if (coords[k] != Rat(0)) return false;
  return true;
}

/// Dominance order: equal Kottwitz points and nu2 - nu1 a nonnegative
/// rational combination of simple coroots.
inline bool dominance_leq(const RootDatum& d, const SigmaClass& b1, const SigmaClass& b2) {
  if (!(b1.kappa == b2.kappa)) return false;
  Cochar diff = b2.nu - b1.nu;
  QVec coords = span_coordinates(d, diff);
  const int z = static_cast<int>(d.central_basis.size());
  for (int k = 0; k < z; ++k)
    if (coords[k] != Rat(0)) return false;
  for (int k = z; k < d.rank; ++k)
    if (coords[k] < Rat(0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration of sigma-conjugacy classes with a given Kottwitz point.
//
// A class is pinned by the orbit set J on which its Newton point is
// nondegenerate together with the integral exponents <mu - nu, omega_i> for
// i in J; the remaining coordinates solve a folded-Cartan linear system.

struct NewtonCandidate {
  Cochar nu;
  QVec exponents;  // <mu_avg - nu, omega_i>, one per orbit
};

namespace detail {

inline std::optional<NewtonCandidate> newton_candidate(const RootDatum& d, const Cochar& mu_avg,
                                                       const std::vector<bool>& in_j,
                                                       const QVec& circle_exponents) {
  const int r = d.num_orbits();
  std::vector<Rat> s(r, Rat(0));
  std::vector<int> free_idx;
  for (int i = 0; i < r; ++i) {
    if (in_j[i])
      s[i] = circle_exponents[i] / Rat(static_cast<long long>(d.orbits[i].size()));
    else
      free_idx.push_back(i);
  }
  if (!free_idx.empty()) {
    QMat m(free_idx.size(), QVec(free_idx.size()));
    QVec rhs(free_idx.size());
    for (std::size_t a = 0; a < free_idx.size(); ++a) {
      int j = free_idx[a];
      Rat target = pairing_with_root(d, mu_avg, d.orbit_reps[j]);
      for (int i = 0; i < r; ++i)
        if (in_j[i]) target -= s[i] * Rat(d.folded_pairing[j][i]);
      rhs[a] = target;
      for (std::size_t b = 0; b < free_idx.size(); ++b) m[a][b] = Rat(d.folded_pairing[j][free_idx[b]]);
    }
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol || !sol->unique)
      throw std::logic_error(d.name + ": folded Cartan system unexpectedly singular");
    for (std::size_t a = 0; a < free_idx.size(); ++a) s[free_idx[a]] = sol->x[a];
  }
  Cochar nu = mu_avg;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < d.rank; ++k) nu[k] -= s[i] * Rat(d.orbit_coroot_sum[i][k]);
  // strict positivity on J (off J the defining equations force pairing zero)
  for (int i = 0; i < r; ++i)
    if (in_j[i] && pairing_with_root(d, nu, d.orbit_reps[i]) <= Rat(0)) return std::nullopt;
  NewtonCandidate c;
  c.nu = std::move(nu);
  c.exponents.resize(r);
  for (int i = 0; i < r; ++i) c.exponents[i] = s[i] * Rat(static_cast<long long>(d.orbits[i].size()));
  return c;
}

}  // namespace detail

inline QVec class_exponents(const RootDatum& d, const Cochar& mu, const SigmaClass& b) {
  QVec e(d.num_orbits());
  Cochar diff = mu - b.nu;
  for (int i = 0; i < d.num_orbits(); ++i) e[i] = pair(d, diff, orbit_weight(d, i));
  return e;
}

inline long long exponent_codim(const QVec& e) {
  long long s = 0;
  for (const Rat& x : e) s += rat_ceil(x);
  return s;
}

/// Deterministic class order used in all reports: ascending codimension
/// (so the maximal class [pi^mu] comes first), ties by descending nu.
inline void sort_classes(const RootDatum& d, const Cochar& mu, std::vector<SigmaClass>& v) {
  std::sort(v.begin(), v.end(), [&](const SigmaClass& a, const SigmaClass& b) {
    long long ca = exponent_codim(class_exponents(d, mu, a));
    long long cb = exponent_codim(class_exponents(d, mu, b));
    if (ca != cb) return ca < cb;
    return b.nu < a.nu;
  });
}

/// All classes with the same Kottwitz point as pi^mu whose exponent vector
/// lies componentwise in [lo, hi]. Circle exponents are integers; disk
/// exponents are derived and merely filtered against the box.
inline std::vector<SigmaClass> kappa_matched_classes_in_box(const RootDatum& d, const Cochar& mu,
                                                            const QVec& lo, const QVec& hi) {
  if (!mu.integral()) throw std::invalid_argument("non-integral mu");
  if (!is_dominant(d, mu)) throw std::invalid_argument("non-dominant mu");
  const int r = d.num_orbits();
  Cochar mu_avg = sigma_average(d, mu);
  KottwitzClass kappa = kottwitz_point(d, mu);
  std::set<SigmaClass> found;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<bool> in_j(r, false);
    std::vector<int> members;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) {
        in_j[i] = true;
        members.push_back(i);
      }
    // global cap: exponents never exceed <mu_avg, omega_i> for dominant nu
    std::vector<long long> lo_i(members.size()), hi_i(members.size());
    bool empty = false;
    for (std::size_t t = 0; t < members.size(); ++t) {
      int i = members[t];
      Rat cap = pair(d, mu_avg, orbit_weight(d, i));
      lo_i[t] = rat_ceil(lo[i]);
      hi_i[t] = std::min(rat_floor(hi[i]), rat_floor(cap));
      if (lo_i[t] > hi_i[t]) empty = true;
    }
    if (empty) continue;
    IntVec n(members.size(), 0);
    for (std::size_t t = 0; t < members.size(); ++t) n[t] = lo_i[t];
    while (true) {
      QVec circle(r, Rat(0));
      for (std::size_t t = 0; t < members.size(); ++t) circle[members[t]] = Rat(n[t]);
      auto cand = detail::newton_candidate(d, mu_avg, in_j, circle);
      if (cand) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
          if (!in_j[i] && (cand->exponents[i] < lo[i] || cand->exponents[i] > hi[i])) ok = false;
        if (ok) found.insert(SigmaClass{kappa, cand->nu});
      }
      // odometer over the circle exponents
      std::size_t t = 0;
      while (t < members.size() && n[t] == hi_i[t]) {
        n[t] = lo_i[t];
        ++t;
      }
      if (t == members.size()) break;
      ++n[t];
    }
  }
  std::vector<SigmaClass> out(found.begin(), found.end());
  sort_classes(d, mu, out);
  return out;
}

/// The Kottwitz set B(G, mu): kappa matches pi^mu and nu <= the sigma-average
/// of mu in dominance order, with the integrality condition on the
/// nondegenerate orbits.
inline std::vector<SigmaClass> kottwitz_set(const RootDatum& d, const Cochar& mu) {
  const int r = d.num_orbits();
  Cochar mu_avg = sigma_average(d, mu);
  QVec lo(r, Rat(0)), hi(r);
  for (int i = 0; i < r; ++i) hi[i] = pair(d, mu_avg, orbit_weight(d, i));
  return kappa_matched_classes_in_box(d, mu, lo, hi);
}

/// Independent oracle: enumerate representative pairs (lam, w) over a box and
/// collect the classes landing in B(G, mu). The box is cut out by
/// |<lam, omega_alpha>| <= bound for every simple root together with central
/// coordinates bounded by `bound`.
inline std::vector<SigmaClass> kottwitz_set_brute_force(const RootDatum& d, const Cochar& mu,
                                                        long long bound) {
  if (!mu.integral()) throw std::invalid_argument("non-integral mu");
  if (!is_dominant(d, mu)) throw std::invalid_argument("non-dominant mu");
  const int n = d.rank;
  const int l = d.num_simple;
  const int z = static_cast<int>(d.central_basis.size());
  Cochar mu_avg = sigma_average(d, mu);
  KottwitzClass kappa = kottwitz_point(d, mu);

  // functional rows lam -> (<lam, omega_1..omega_l>, central coords)
  QMat functionals(n, QVec(n, Rat(0)));
  for (int j = 0; j < l; ++j)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        functionals[j][a] += Rat(d.pairing[a][b]) * d.fundamental_weights[j][b];
  for (int k = 0; k < z; ++k)
    for (int a = 0; a < n; ++a) functionals[l + k][a] = d.span_coords[k][a];
  auto finv = q_mat_inverse(functionals);
  if (!finv) throw std::logic_error("brute force: degenerate functional matrix");
  long long raw = 0;
  for (int i = 0; i < n; ++i) {
    Rat row(0);
    for (int j = 0; j < n; ++j) row += ((*finv)[i][j] < Rat(0) ? -(*finv)[i][j] : (*finv)[i][j]);
    raw = std::max(raw, rat_ceil(row * Rat(bound)));
  }

  // averaging data per Weyl element: integer matrix sum and its order
  struct Avg {
    IntMat sum;
    int order;
  };
  std::vector<Avg> avgs;
  IntMat id = int_identity(n);
  for (const IntMat& wm : d.weyl_actions) {
    IntMat a = int_mat_mul(wm, d.sigma_cochar);
    IntMat pw = a;
    IntMat sum = int_identity(n);
    int order = 1;
    while (pw != id) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sum[i][j] += pw[i][j];
      pw = int_mat_mul(pw, a);
      if (++order > 20000) throw std::logic_error("brute force: action order overflow");
    }
    avgs.push_back({std::move(sum), order});
  }

  // integer-normalized (numerator, denominator) pairs; all rational work is
  // deferred until after deduplication
  std::set<std::pair<IntVec, long long>> seen;
  IntVec lam(n, -raw);
  while (true) {
    bool inside = true;
    for (int j = 0; j < l && inside; ++j) {
      Rat v(0);
      for (int a = 0; a < n; ++a) v += functionals[j][a] * Rat(lam[a]);
      if (v > Rat(bound) || v < Rat(-bound)) inside = false;
    }
    for (int k = 0; k < z && inside; ++k) {
      Rat v(0);
      for (int a = 0; a < n; ++a) v += functionals[l + k][a] * Rat(lam[a]);
      if (v > Rat(bound) || v < Rat(-bound)) inside = false;
    }
    if (inside && kottwitz_point_int(d, lam) == kappa) {
      for (const Avg& av : avgs) {
        IntVec num = int_mat_vec(av.sum, lam);
        // dominantize the integer numerator (denominator av.order is fixed)
        bool moved = true;
        while (moved) {
          moved = false;
          for (int j = 0; j < l; ++j)
            if (pairing_with_root_int(d, num, j) < 0) {
              reflect_int_inplace(d, j, num);
              moved = true;
            }
        }
        long long g = av.order;
        for (long long x : num) g = std::gcd(g, x < 0 ? -x : x);
        IntVec red(n);
        for (int i = 0; i < n; ++i) red[i] = num[i] / g;
        seen.insert({std::move(red), av.order / g});
      }
    }
    int t = 0;
    while (t < n && lam[t] == raw) {
      lam[t] = -raw;
      ++t;
    }
    if (t == n) break;
    ++lam[t];
  }

  std::set<SigmaClass> found;
  SigmaClass top{kappa, mu_avg};
  for (const auto& [num, den] : seen) {
    Cochar nu;
    nu.c.reserve(n);
    for (int i = 0; i < n; ++i) nu.c.emplace_back(num[i], den);
    SigmaClass cls{kappa, std::move(nu)};
    if (dominance_leq(d, cls, top)) found.insert(std::move(cls));
  }
  std::vector<SigmaClass> out(found.begin(), found.end());
  sort_classes(d, mu, out);
  return out;
}

/// Default-bound oracle: box radius one past the largest coordinate of mu,
/// re-run one wider as a stability check.
inline std::vector<SigmaClass> kottwitz_set_brute_force(const RootDatum& d, const Cochar& mu) {
  long long bound = 1;
  for (const Rat& x : mu.c) bound = std::max(bound, std::llabs(rat_ceil(x)));
  ++bound;
  auto result = kottwitz_set_brute_force(d, mu, bound);
  auto wider = kottwitz_set_brute_force(d, mu, bound + 1);
  if (!(result == wider))
    throw std::logic_error(d.name + ": brute-force enumeration unstable under bound growth");
  return result;
}

/// Hodge-Newton irreducibility: mu_avg - nu strictly positive against every
/// orbit weight.
inline bool is_hn_irreducible(const RootDatum& d, const Cochar& mu, const SigmaClass& b) {
  Cochar mu_avg = sigma_average(d, mu);
  SigmaClass top{kottwitz_point(d, mu), mu_avg};
  if (!(b.kappa == top.kappa) || !dominance_leq(d, b, top))
    throw std::invalid_argument("is_hn_irreducible: class not in B(G, mu)");
  for (int i = 0; i < d.num_orbits(); ++i)
    if (pair(d, mu_avg - b.nu, orbit_weight(d, i)) <= Rat(0)) return false;
  return true;
}

}  // namespace loopcross
