#pragma once

#include "loopcross/cross_section.hpp"
#include "loopcross/laurent.hpp"

namespace loopcross {

/// Chai's length between comparable classes, computed from the stratum
/// exponents of any translation with the right Kottwitz point:
///   sum_i ceil(<mu - nu(lower), omega_i>) - ceil(<mu - nu(upper), omega_i>).
/// The value is independent of the choice of mu; this is re-checked
/// internally by shifting mu by a coroot.
inline long long poset_length(const RootDatum& d, const Cochar& mu, const SigmaClass& upper,
                              const SigmaClass& lower) {
  if (!(kottwitz_point(d, mu) == upper.kappa))
    throw kappa_mismatch(d.name + ": poset_length needs kappa(pi^mu) = kappa(b)");
  if (!dominance_leq(d, lower, upper))
    throw std::invalid_argument(d.name + ": poset_length needs comparable classes");
  auto value = [&](const Cochar& m) {
    QVec eu = class_exponents(d, m, upper);
    QVec el = class_exponents(d, m, lower);
    long long acc = 0;
    for (std::size_t i = 0; i < eu.size(); ++i) acc += rat_ceil(el[i]) - rat_ceil(eu[i]);
    return acc;
  };
  long long len = value(mu);
  if (d.num_simple > 0) {
    Cochar shifted = mu;
    for (int a = 0; a < d.rank; ++a) shifted[a] += Rat(d.simple_coroots[d.orbit_reps[0]][a]);
    if (value(shifted) != len)
      throw std::logic_error(d.name + ": length depends on the choice of mu");
  }
  return len;
}

/// Cover edges of the dominance order restricted to `classes`, as index pairs
/// (lower, upper).
inline std::vector<std::pair<int, int>> hasse_diagram(const RootDatum& d,
                                                      const std::vector<SigmaClass>& classes) {
  const int n = static_cast<int>(classes.size());
  std::vector<std::pair<int, int>> edges;
  for (int lo = 0; lo < n; ++lo)
    for (int hi = 0; hi < n; ++hi) {
      if (lo == hi) continue;
      if (!dominance_leq(d, classes[lo], classes[hi])) continue;
      if (classes[lo] == classes[hi]) continue;
      bool cover = true;
      for (int mid = 0; mid < n && cover; ++mid) {
        if (mid == lo || mid == hi) continue;
        if (dominance_leq(d, classes[lo], classes[mid]) && dominance_leq(d, classes[mid], classes[hi]) &&
            !(classes[mid] == classes[lo]) && !(classes[mid] == classes[hi]))
          cover = false;
      }
      if (cover) edges.push_back({lo, hi});
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Does the closure of the `outer` stratum contain the `inner` stratum?
/// Componentwise: a circle coordinate of the inner stratum must sit at or
/// above the outer ceiling; a disk coordinate must have its ceiling there.
inline bool closure_contains(const StratumShape& outer, const StratumShape& inner) {
  if (!(outer.mu == inner.mu)) throw std::invalid_argument("closure_contains: shapes for different mu");
  if (!(outer.cls.kappa == inner.cls.kappa))
    throw kappa_mismatch("closure_contains: shapes with different kappa");
  for (std::size_t i = 0; i < outer.exponents.size(); ++i) {
    long long outer_ceil = rat_ceil(outer.exponents[i]);
    if (inner.kinds[i] == CoordKind::circle) {
      if (inner.exponents[i] < Rat(outer_ceil)) return false;
    } else {
      if (rat_ceil(inner.exponents[i]) < outer_ceil) return false;
    }
  }
  return true;
}

/// Mazur inequality check: all stratum exponents nonnegative. Equivalent to
/// membership of b in B(G, mu).
inline bool mazur_check(const RootDatum& d, const Cochar& mu, const SigmaClass& b) {
  StratumShape s = stratum_shape(d, mu, b);
  for (const Rat& e : s.exponents)
    if (e < Rat(0)) return false;
  return true;
}

/// Exact count of stratum points at truncation level m:
///   (q-1)^{#J} q^{m r - #J - leng}.
/// Valid once m clears every coordinate: m > e_i on circles, m >= ceil(e_i)
/// on disks.
inline LaurentPoly point_count(const RootDatum& d, const Cochar& mu, const SigmaClass& b,
                               long long m) {
  if (m < 1) throw std::invalid_argument("point_count: truncation level must be positive");
  StratumShape s = stratum_shape(d, mu, b);
  for (std::size_t i = 0; i < s.exponents.size(); ++i) {
    if (s.kinds[i] == CoordKind::circle) {
      if (Rat(m) <= s.exponents[i])
        throw std::invalid_argument(d.name + ": truncation level too small for a circle coordinate");
    } else {
      if (m < rat_ceil(s.exponents[i]))
        throw std::invalid_argument(d.name + ": truncation level too small for a disk coordinate");
    }
  }
  const long long r = d.num_orbits();
  const long long j = static_cast<long long>(newton_support(d, b.nu).size());
  const long long leng = s.codim();
  return q_minus_one_pow(j) * LaurentPoly::monomial(m * r - j - leng);
}

// ---------------------------------------------------------------------------
// The two exact q-identities over B(G, mu).

struct IdentityTerm {
  SigmaClass cls;
  long long j_size = 0;
  long long leng = 0;
  LaurentPoly term;
};

struct IdentityReport {
  bool applicable = true;  // the irreducible identity is vacuous when B_irr is empty
  std::vector<IdentityTerm> terms;
  LaurentPoly sum;
  bool ok = false;
};

/// sum over B(G, mu) of (q-1)^{#J} q^{-#J - leng([pi^mu],[b])} == 1,
/// verified exactly and re-checked at sample integers.
inline IdentityReport full_sum_identity(const RootDatum& d, const Cochar& mu) {
  IdentityReport rep;
  auto classes = kottwitz_set(d, mu);
  SigmaClass top = classes.front();
  for (const auto& b : classes) {
    IdentityTerm t;
    t.cls = b;
    t.j_size = static_cast<long long>(newton_support(d, b.nu).size());
    t.leng = poset_length(d, mu, top, b);
    t.term = q_minus_one_pow(t.j_size) * LaurentPoly::monomial(-t.j_size - t.leng);
    rep.sum += t.term;
    rep.terms.push_back(std::move(t));
  }
  rep.ok = rep.sum.is_one();
  for (long long q : {2, 3, 4, 5}) rep.ok = rep.ok && rep.sum.eval(q) == Rat(1);
  return rep;
}

/// sum over the Hodge-Newton irreducible part of (q-1)^{#J} q^{r - #J - leng}
/// == 1, when that part is nonempty.
inline IdentityReport irreducible_sum_identity(const RootDatum& d, const Cochar& mu) {
  IdentityReport rep;
  auto classes = kottwitz_set(d, mu);
  SigmaClass top = classes.front();
  const long long r = d.num_orbits();
  for (const auto& b : classes) {
    if (!is_hn_irreducible(d, mu, b)) continue;
    IdentityTerm t;
    t.cls = b;
    t.j_size = static_cast<long long>(newton_support(d, b.nu).size());
    t.leng = poset_length(d, mu, top, b);
    t.term = q_minus_one_pow(t.j_size) * LaurentPoly::monomial(r - t.j_size - t.leng);
    rep.sum += t.term;
    rep.terms.push_back(std::move(t));
  }
  if (rep.terms.empty()) {
    rep.applicable = false;
    rep.ok = true;
    return rep;
  }
  rep.ok = rep.sum.is_one();
  for (long long q : {2, 3, 4, 5}) rep.ok = rep.ok && rep.sum.eval(q) == Rat(1);
  return rep;
}

}  // namespace loopcross
