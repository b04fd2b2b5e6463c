#pragma once

#include <set>

#include "loopcross/isocrystal.hpp"

namespace loopcross {

/// Per-orbit coordinate condition cut out by a Newton stratum of the
/// cross-section: `circle` pins the coordinate valuation to the exponent,
/// `disk` only bounds it below by the exponent's ceiling.
enum class CoordKind { circle, disk };

inline const char* coord_kind_name(CoordKind k) { return k == CoordKind::circle ? "circle" : "disk"; }

struct StratumShape {
  SigmaClass cls;
  Cochar mu;                     // the translation part the shape is relative to
  QVec exponents;                // <mu - nu, omega_i> per orbit
  std::vector<CoordKind> kinds;  // circle exactly on the nondegenerate orbits

  long long codim() const { return exponent_codim(exponents); }
};

// ---------------------------------------------------------------------------
// Roots coordinatizing the cross-section.

/// The positive roots beta_i sent negative by (coxeter * sigma); beta_i is
/// obtained from the i-th orbit representative by reflecting through the
/// later representatives and twisting back. Their root subgroups commute.
inline std::vector<Charv> cross_section_roots(const RootDatum& d) {
  const int r = d.num_orbits();
  std::vector<Charv> out;
  out.reserve(r);
  for (int i = 0; i < r; ++i) {
    Charv x(to_qvec(d.simple_roots[d.orbit_reps[i]]));
    for (int j = i + 1; j < r; ++j) x = reflect(d, d.orbit_reps[j], x);
    // inverse twist: solve sigma_char * y = x
    QMat m(d.rank, QVec(d.rank));
    for (int a = 0; a < d.rank; ++a)
      for (int b = 0; b < d.rank; ++b) m[a][b] = Rat(d.sigma_char[a][b]);
    auto sol = solve_linear(std::move(m), x.c);
    if (!sol || !sol->unique) throw std::logic_error("cross_section_roots: sigma not invertible");
    out.push_back(Charv(sol->x));
  }
  return out;
}

/// Apply the composite (coxeter word) after sigma to a character vector.
inline Charv act_coxeter_sigma(const RootDatum& d, const Charv& x) {
  return act_word(d, coxeter_element(d), act_sigma(d, x));
}

inline Cochar act_coxeter_sigma(const RootDatum& d, const Cochar& v) {
  return act_word(d, coxeter_element(d), act_sigma(d, v));
}

// ---------------------------------------------------------------------------
// The twist equation (1 - c sigma) lambda = mu - nu.

/// Unique solution inside the rational coroot span. Requires mu - nu to lie
/// in that span, which is exactly the rational shadow of kappa agreement.
inline Cochar solve_twist_equation(const RootDatum& d, const Cochar& mu, const Cochar& nu) {
  const int l = d.num_simple;
  Cochar target = mu - nu;
  if (!in_coroot_span(d, target))
    throw kappa_mismatch(d.name + ": mu - nu is not in the rational coroot span");
  QMat cols(d.rank, QVec(l));
  for (int k = 0; k < l; ++k) {
    Cochar g(to_qvec(d.simple_coroots[k]));
    Cochar img = g - act_coxeter_sigma(d, g);
    for (int a = 0; a < d.rank; ++a) cols[a][k] = img[a];
  }
  auto sol = solve_linear(std::move(cols), target.c);
  if (!sol || !sol->unique)
    throw std::logic_error(d.name + ": twist equation not uniquely solvable on the coroot span");
  Cochar lambda;
  lambda.c.assign(d.rank, Rat(0));
  for (int k = 0; k < l; ++k)
    for (int a = 0; a < d.rank; ++a) lambda[a] += sol->x[k] * Rat(d.simple_coroots[k][a]);

  // <lambda, beta_i> must reproduce the exponents <mu - nu, omega_i>
  auto betas = cross_section_roots(d);
  for (int i = 0; i < d.num_orbits(); ++i) {
    if (pair(d, lambda, betas[i]) != pair(d, target, orbit_weight(d, i)))
      throw std::logic_error(d.name + ": twist equation solution fails the exponent identity");
  }
  return lambda;
}

// ---------------------------------------------------------------------------
// Stratum shapes.

/// Shape of [b] inside the cross-section attached to mu. Throws
/// kappa_mismatch when the stratum is empty.
inline StratumShape stratum_shape(const RootDatum& d, const Cochar& mu, const SigmaClass& b) {
  if (!(kottwitz_point(d, mu) == b.kappa))
    throw kappa_mismatch(d.name + ": kappa(pi^mu) differs from kappa(b); stratum is empty");
  StratumShape s;
  s.cls = b;
  s.mu = mu;
  s.exponents = class_exponents(d, mu, b);
  auto j = newton_support(d, b.nu);
  std::set<int> jset(j.begin(), j.end());
  s.kinds.resize(d.num_orbits());
  for (int i = 0; i < d.num_orbits(); ++i) {
    bool circle = jset.count(i) > 0;
    s.kinds[i] = circle ? CoordKind::circle : CoordKind::disk;
    if (circle && !rat_is_integer(s.exponents[i]))
      throw std::logic_error(d.name + ": circle exponent is not integral");
  }
  return s;
}

/// Classify the coordinate-valuation pattern of a cross-section point.
/// nullopt entries mark the +infinity valuation (zero coordinate).
///
/// Every subset J of the finite coordinates pins at most one candidate class
/// (circle exponents are forced to equal the pattern there), so the search is
/// exact with no box; the strata partition the space, so exactly one subset
/// can produce a hit.
inline SigmaClass classify_valuation_pattern(const RootDatum& d, const Cochar& mu,
                                             const std::vector<std::optional<long long>>& vals) {
  const int r = d.num_orbits();
  if (static_cast<int>(vals.size()) != r)
    throw std::invalid_argument("pattern length must equal the number of orbits");
  Cochar mu_avg = sigma_average(d, mu);
  KottwitzClass kappa = kottwitz_point(d, mu);
  std::vector<SigmaClass> hits;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<bool> in_j(r, false);
    QVec circle(r, Rat(0));
    bool feasible = true;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) {
        if (!vals[i]) {
          feasible = false;
          break;
        }
        in_j[i] = true;
        circle[i] = Rat(*vals[i]);
      }
    if (!feasible) continue;
    auto cand = detail::newton_candidate(d, mu_avg, in_j, circle);
    if (!cand) continue;
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      if (in_j[i]) continue;
      long long ceil_e = rat_ceil(cand->exponents[i]);
      if (vals[i] && *vals[i] < ceil_e) ok = false;
    }
    if (ok) hits.push_back(SigmaClass{kappa, cand->nu});
  }
  if (hits.size() != 1) {
    std::string msg = d.name + ": valuation pattern matched " + std::to_string(hits.size()) + " classes";
    throw std::logic_error(msg);
  }
  return hits.front();
}

// ---------------------------------------------------------------------------
// Exponents for the negative-coordinate description of a coroot translate.

/// m_i = -n_i - sum_{j > i} n_j <coroot_{rep_j}, root_{rep_i}> for the
/// translate by sum n_i coroot_{rep_i}.
inline IntVec coroot_shift_exponents(const RootDatum& d, const IntVec& n) {
  const int r = d.num_orbits();
  if (static_cast<int>(n.size()) != r)
    throw std::invalid_argument("coefficient vector length must equal the number of orbits");
  IntVec m(r, 0);
  for (int i = 0; i < r; ++i) {
    long long acc = -n[i];
    for (int j = i + 1; j < r; ++j) acc -= n[j] * d.cartan[d.orbit_reps[j]][d.orbit_reps[i]];
    m[i] = acc;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Canonical translation representative.

/// The unique eta with mu - eta an integral combination of the orbit
/// representative coroots and chi - eta in (1 - sigma) X_*. Exists exactly
/// when pi^mu and pi^chi share their Kottwitz point.
inline Cochar translation_representative(const RootDatum& d, const Cochar& mu, const Cochar& chi) {
  if (!mu.integral() || !chi.integral())
    throw std::invalid_argument("translation_representative: inputs must be integral");
  const int r = d.num_orbits();
  const int n = d.rank;
  IntMat cols(n, IntVec(r + n, 0));
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a) cols[a][i] = d.simple_coroots[d.orbit_reps[i]][a];
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a) cols[a][r + j] = (a == j ? 1 : 0) - d.sigma_cochar[a][j];
  IntVec target(n);
  for (int a = 0; a < n; ++a) target[a] = (mu[a] - chi[a]).numerator();
  auto y = solve_integer(smith_form(cols), target);
  if (!y) throw kappa_mismatch(d.name + ": kappa(pi^mu) differs from kappa(pi^chi)");
  Cochar eta = mu;
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < n; ++a) eta[a] -= Rat((*y)[i] * d.simple_coroots[d.orbit_reps[i]][a]);
  return eta;
}

// ---------------------------------------------------------------------------
// The Cross operator on sets of positive roots.

namespace detail {

/// Does `target` (simple-root coordinates) lie in a * gamma + nonneg combos
/// of the betas, with a >= 1? Heights bound every coefficient.
inline bool in_shifted_cone(const IntVec& target, const IntVec& gamma,
                            const std::vector<IntVec>& betas) {
  const int l = static_cast<int>(target.size());
  IntVec rem(l);
  for (int k = 0; k < l; ++k) {
    rem[k] = target[k] - gamma[k];  // a >= 1: peel one copy of gamma
    if (rem[k] < 0) return false;
  }
  // DFS over remaining generators {gamma, beta_1, ..., beta_r}
  std::vector<const IntVec*> gens;
  gens.push_back(&gamma);
  for (const auto& b : betas) gens.push_back(&b);
  std::vector<IntVec> stack{rem};
  std::set<IntVec> seen{rem};
  while (!stack.empty()) {
    IntVec cur = stack.back();
    stack.pop_back();
    bool zero = true;
    for (int k = 0; k < l; ++k)
      if (cur[k] != 0) zero = false;
    if (zero) return true;
    for (const IntVec* g : gens) {
      IntVec nxt(l);
      bool ok = true;
      for (int k = 0; k < l; ++k) {
        nxt[k] = cur[k] - (*g)[k];
        if (nxt[k] < 0) ok = false;
      }
      if (ok && seen.insert(nxt).second) stack.push_back(nxt);
    }
  }
  return false;
}

}  // namespace detail

/// Cross operator: positive roots lying in the (coxeter*sigma)-image of the
/// cone spanned by a root of the input set (with multiplicity at least one)
/// and the cross-section roots. Input and output are indices into
/// d.positive_roots.
inline std::set<int> cross_operator(const RootDatum& d, const std::set<int>& gamma_set) {
  const int npos = static_cast<int>(d.positive_roots.size());
  for (int g : gamma_set)
    if (g < 0 || g >= npos) throw std::invalid_argument("cross_operator: not a positive root");

  // simple-root coordinates of the betas
  auto betas = cross_section_roots(d);
  std::vector<IntVec> beta_coords;
  for (const auto& b : betas) {
    int idx = positive_root_index(d, to_intvec(b.c));
    if (idx < 0) throw std::logic_error("cross-section root is not positive");
    beta_coords.push_back(d.positive_root_simple_coords[idx]);
  }

  std::set<int> out;
  WeylWord c = coxeter_element(d);
  QMat sig(d.rank, QVec(d.rank));
  for (int a = 0; a < d.rank; ++a)
    for (int b = 0; b < d.rank; ++b) sig[a][b] = Rat(d.sigma_char[a][b]);
  QMat rootmat(d.rank, QVec(d.num_simple));
  for (int a = 0; a < d.rank; ++a)
    for (int j = 0; j < d.num_simple; ++j) rootmat[a][j] = Rat(d.simple_roots[j][a]);
  for (int rho = 0; rho < npos; ++rho) {
    // pull rho back through (coxeter * sigma): apply the coxeter word inverse,
    // then undo sigma
    Charv x(to_qvec(d.positive_roots[rho]));
    for (int t = 0; t < static_cast<int>(c.size()); ++t) x = reflect(d, c[t], x);
    auto pre = solve_linear(sig, x.c);
    if (!pre || !pre->unique) throw std::logic_error("cross_operator: sigma not invertible");
    // simple-root coordinates of the preimage; must be a nonnegative integer
    // vector to lie in any shifted cone
    auto coords = solve_linear(rootmat, pre->x);
    if (!coords) continue;
    IntVec tc(d.num_simple);
    bool nonneg = true;
    for (int j = 0; j < d.num_simple; ++j) {
      if (!rat_is_integer(coords->x[j])) {
        nonneg = false;
        break;
      }
      tc[j] = coords->x[j].numerator();
      if (tc[j] < 0) nonneg = false;
    }
    if (!nonneg) continue;
    for (int g : gamma_set) {
      if (detail::in_shifted_cone(tc, d.positive_root_simple_coords[g], beta_coords)) {
        out.insert(rho);
        break;
      }
    }
  }
  return out;
}

/// Least d with the d-fold Cross iterate of all positive roots empty.
/// Exceeding the iteration cap would contradict nilpotence and signals a bug.
inline int cross_nilpotence_depth(const RootDatum& d) {
  std::set<int> cur;
  for (int i = 0; i < static_cast<int>(d.positive_roots.size()); ++i) cur.insert(i);
  int depth = 0;
  const int cap = static_cast<int>(d.positive_roots.size()) + 1;
  while (!cur.empty()) {
    cur = cross_operator(d, cur);
    ++depth;
    if (depth > cap) throw std::logic_error(d.name + ": Cross iteration exceeded its nilpotence cap");
  }
  return depth;
}

}  // namespace loopcross
