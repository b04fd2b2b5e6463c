#pragma once

#include <map>

#include "loopcross/newton_poset.hpp"

namespace loopcross {

// ---------------------------------------------------------------------------
// Truncated Laurent series over F_p.
//
// A value is stored as a coefficient window [off, off + size): it is known to
// lie in pi^off * O and is known exactly modulo pi^prec with prec = off + size.
// Ring operations propagate the window, so precision loss is tracked rather
// than assumed; a valuation is only ever reported when a nonzero coefficient
// witnesses it inside the window.

class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(long long p, int off, std::vector<long long> coeffs)
      : p_(p), off_(off), c_(std::move(coeffs)) {
    for (long long& x : c_) x = ((x % p_) + p_) % p_;
    // stored leading zeros are exact zeros of the value, so the window may
    // start past them; product precision bounds use the window start
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
      off_ += static_cast<int>(lead);
      c_.erase(c_.begin(), c_.begin() + static_cast<long long>(lead));
    }
  }

  static TruncSeries zero_window(long long p, int off, int size) {
    return TruncSeries(p, off, std::vector<long long>(size, 0));
  }
  /// Exact polynomial (or Laurent monomial shift of one), known through
  /// pi^prec.
  static TruncSeries from_poly(long long p, const std::vector<long long>& coeffs, int prec) {
    if (static_cast<int>(coeffs.size()) > prec)
      throw std::invalid_argument("TruncSeries: polynomial degree exceeds the precision window");
    std::vector<long long> c(prec, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
    return TruncSeries(p, 0, std::move(c));
  }
  static TruncSeries uniformizer_power(long long p, int e, int prec) {
    // window [e, e + prec): exact through pi^{e + prec}
    std::vector<long long> c(prec, 0);
    if (!c.empty()) c[0] = 1;
    return TruncSeries(p, e, std::move(c));
  }

  long long modulus() const { return p_; }
  int offset() const { return off_; }
  int prec() const { return off_ + static_cast<int>(c_.size()); }

  /// Coefficient of pi^k; below the window it is genuinely zero, at or above
  /// the precision it is unknown.
  long long residue(int k) const {
    if (k < off_) return 0;
    if (k >= prec()) throw std::logic_error("TruncSeries: coefficient beyond precision");
    return c_[k - off_];
  }

  /// Exact valuation when witnessed by a nonzero stored coefficient;
  /// nullopt means only "valuation >= prec()" is known.
  std::optional<int> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return off_ + static_cast<int>(i);
    return std::nullopt;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int off = std::min(a.off_, b.off_);
    int prec = std::min(a.prec(), b.prec());
    std::vector<long long> c(prec - off, 0);
    for (int k = off; k < prec; ++k) c[k - off] = (a.residue(k) + b.residue(k)) % a.p_;
    return TruncSeries(a.p_, off, std::move(c));
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    int off = std::min(a.off_, b.off_);
    int prec = std::min(a.prec(), b.prec());
    std::vector<long long> c(prec - off, 0);
    for (int k = off; k < prec; ++k) c[k - off] = (a.residue(k) - b.residue(k)) % a.p_;
    return TruncSeries(a.p_, off, std::move(c));
  }
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (long long& x : r.c_) x = (p_ - x) % p_;
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int off = a.off_ + b.off_;
    int prec = std::min(a.off_ + b.prec(), b.off_ + a.prec());
    std::vector<long long> c(std::max(prec - off, 0), 0);
    const int ma = static_cast<int>(a.c_.size()), mb = static_cast<int>(b.c_.size());
    for (int s = 0; s < ma; ++s) {
      if (a.c_[s] == 0) continue;
      int jmax = std::min(static_cast<int>(c.size()) - s, mb);
      for (int t = 0; t < jmax; ++t) c[s + t] = (c[s + t] + a.c_[s] * b.c_[t]) % a.p_;
    }
    return TruncSeries(a.p_, off, std::move(c));
  }

  /// Inverse; needs a witnessed valuation. Relative precision is preserved.
  TruncSeries invert() const {
    auto v = valuation();
    if (!v) throw truncation_error("TruncSeries: cannot invert a series of unknown valuation");
    int rel = prec() - *v;
    std::vector<long long> u(rel), w(rel, 0);
    for (int i = 0; i < rel; ++i) u[i] = c_[*v - off_ + i];
    long long u0inv = mod_inverse(u[0], p_);
    w[0] = u0inv;
    for (int j = 1; j < rel; ++j) {
      long long acc = 0;
      for (int s = 1; s <= j; ++s) acc = (acc + u[s] * w[j - s]) % p_;
      w[j] = (p_ - acc % p_) * u0inv % p_;
    }
    return TruncSeries(p_, -*v, std::move(w));
  }

 private:
  static long long mod_inverse(long long a, long long p) {
    long long r = 1, base = ((a % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  }

  long long p_ = 2;
  int off_ = 0;
  std::vector<long long> c_;
};

struct TruncMatrix {
  long long p = 2;
  int n = 0;
  std::vector<std::vector<TruncSeries>> a;
};

inline TruncMatrix trunc_identity(long long p, int n, int prec) {
  TruncMatrix m{p, n, {}};
  m.a.assign(n, std::vector<TruncSeries>(n, TruncSeries::zero_window(p, 0, prec)));
  for (int i = 0; i < n; ++i) m.a[i][i] = TruncSeries::from_poly(p, {1}, prec);
  return m;
}

inline TruncMatrix trunc_mul(const TruncMatrix& x, const TruncMatrix& y) {
  TruncMatrix r{x.p, x.n, {}};
  r.a.assign(x.n, std::vector<TruncSeries>(x.n));
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      TruncSeries acc = x.a[i][0] * y.a[0][j];
      for (int k = 1; k < x.n; ++k) acc = acc + x.a[i][k] * y.a[k][j];
      r.a[i][j] = acc;
    }
  return r;
}

// ---------------------------------------------------------------------------
// The GL_n cross-section matrix
//   diag(pi^mu) * s_1 U_1(x_1) * ... * s_{n-1} U_{n-1}(x_{n-1}),
// with the signed permutation lift s_i acting on rows (i, i+1) as
// [[0, -1], [1, 0]]. Each coordinate lands in exactly one entry.

inline TruncMatrix cross_section_matrix(int n, const IntVec& mu, const std::vector<TruncSeries>& coords) {
  if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("mu length must equal n");
  if (static_cast<int>(coords.size()) != n - 1)
    throw std::invalid_argument("need exactly n - 1 cross-section coordinates");
  long long p = coords.empty() ? 2 : coords[0].modulus();
  int prec = coords.empty() ? 8 : coords[0].prec();
  TruncMatrix g{p, n, {}};
  g.a.assign(n, std::vector<TruncSeries>(n, TruncSeries::zero_window(p, 0, prec)));
  for (int i = 0; i < n; ++i)
    g.a[i][i] = TruncSeries::uniformizer_power(p, static_cast<int>(mu[i]), prec);
  for (int i = 0; i + 1 < n; ++i) {
    TruncMatrix f = trunc_identity(p, n, prec);
    f.a[i][i] = TruncSeries::zero_window(p, 0, prec);
    f.a[i][i + 1] = -TruncSeries::from_poly(p, {1}, prec);
    f.a[i + 1][i] = TruncSeries::from_poly(p, {1}, prec);
    f.a[i + 1][i + 1] = coords[i];
    g = trunc_mul(g, f);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Newton polygons.

namespace detail {

/// Vertices of the lower convex hull of the given points (x strictly
/// increasing on input).
inline std::vector<std::pair<long long, long long>> lower_hull(
    std::vector<std::pair<long long, long long>> pts) {
  std::vector<std::pair<long long, long long>> h;
  for (const auto& pt : pts) {
    while (h.size() >= 2) {
      auto [x1, y1] = h[h.size() - 2];
      auto [x2, y2] = h[h.size() - 1];
      // drop the middle point when it lies on or above the new chord
      if ((y2 - y1) * (pt.first - x1) >= (pt.second - y1) * (x2 - x1))
        h.pop_back();
      else
        break;
    }
    h.push_back(pt);
  }
  return h;
}

inline Rat hull_height_at(const std::vector<std::pair<long long, long long>>& hull, long long x) {
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    auto [x1, y1] = hull[s];
    auto [x2, y2] = hull[s + 1];
    if (x1 <= x && x <= x2)
      return Rat(y1) + Rat(y2 - y1, x2 - x1) * Rat(x - x1);
  }
  throw std::logic_error("hull query outside the polygon range");
}

}  // namespace detail

/// Slopes of the Newton polygon of a characteristic polynomial
/// t^n + a_1 t^{n-1} + ... + a_n given the coefficient valuations
/// (a_n last, nullopt for +infinity). Slopes are repeated with multiplicity
/// and sorted descending, giving the dominant Newton point for GL_n.
inline Cochar newton_polygon_slopes(const std::vector<std::optional<long long>>& vals) {
  const int n = static_cast<int>(vals.size());
  if (n == 0 || !vals.back())
    throw std::invalid_argument("newton_polygon_slopes: the determinant valuation must be finite");
  std::vector<std::pair<long long, long long>> pts{{0, 0}};
  for (int i = 1; i <= n; ++i)
    if (vals[i - 1]) pts.push_back({i, *vals[i - 1]});
  auto hull = detail::lower_hull(std::move(pts));
  QVec slopes;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    auto [x1, y1] = hull[s];
    auto [x2, y2] = hull[s + 1];
    for (long long k = 0; k < x2 - x1; ++k) slopes.push_back(Rat(y2 - y1, x2 - x1));
  }
  std::reverse(slopes.begin(), slopes.end());
  return Cochar(std::move(slopes));
}

/// Characteristic polynomial det(t I - g), coefficients of t^0 .. t^n.
inline std::vector<TruncSeries> char_poly(const TruncMatrix& g) {
  const int n = g.n;
  const int prec = g.a[0][0].prec();
  // entries of t*I - g as degree <= 1 polynomials in t
  auto entry = [&](int i, int j) {
    std::vector<TruncSeries> e{-g.a[i][j]};
    if (i == j) e.push_back(TruncSeries::from_poly(g.p, {1}, prec));
    return e;
  };
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<TruncSeries> acc(n + 1, TruncSeries::zero_window(g.p, 0, prec));
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<TruncSeries> prod{TruncSeries::from_poly(g.p, {1}, prec)};
    for (int i = 0; i < n; ++i) {
      auto e = entry(i, perm[i]);
      std::vector<TruncSeries> next(prod.size() + e.size() - 1,
                                    TruncSeries::zero_window(g.p, 0, prec));
      for (std::size_t s = 0; s < prod.size(); ++s)
        for (std::size_t t = 0; t < e.size(); ++t) next[s + t] = next[s + t] + prod[s] * e[t];
      prod = std::move(next);
    }
    for (std::size_t k = 0; k < prod.size(); ++k)
      acc[k] = (inversions % 2 == 0) ? acc[k] + prod[k] : acc[k] - prod[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// Kottwitz/Newton invariants of a GL_n cross-section point, read off the
/// characteristic polynomial. Any decision that would need coefficients at or
/// beyond the precision window raises truncation_error instead of guessing.
inline SigmaClass classify_matrix(const RootDatum& d, const TruncMatrix& g) {
  const int n = g.n;
  if (d.rank != n) throw std::invalid_argument("classify_matrix: datum rank does not match the matrix");
  auto cp = char_poly(g);
  std::vector<std::optional<long long>> vals(n);
  std::vector<int> precs(n);
  for (int i = 1; i <= n; ++i) {
    auto v = cp[n - i].valuation();
    vals[i - 1] = v ? std::optional<long long>(*v) : std::nullopt;
    precs[i - 1] = cp[n - i].prec();
  }
  if (!vals[n - 1])
    throw truncation_error(d.name + ": determinant valuation not witnessed below the precision window");

  // soundness: coefficients with unknown valuation must be provably above the
  // hull of the witnessed ones
  std::vector<std::pair<long long, long long>> pts{{0, 0}};
  for (int i = 1; i <= n; ++i)
    if (vals[i - 1]) pts.push_back({i, *vals[i - 1]});
  auto hull = detail::lower_hull(pts);
  for (int i = 1; i < n; ++i)
    if (!vals[i - 1] && detail::hull_height_at(hull, i) > Rat(precs[i - 1]))
      throw truncation_error(d.name + ": truncation too coarse to pin the Newton polygon");

  Cochar nu = newton_polygon_slopes(vals);
  Cochar det_class;
  det_class.c.assign(n, Rat(0));
  det_class[0] = Rat(*vals[n - 1]);
  return SigmaClass{kottwitz_point(d, det_class), std::move(nu)};
}

/// Elementary divisor valuations (Smith normal form over the truncated
/// valuation ring), sorted descending: the dominant cocharacter lam with
/// g in K pi^lam K.
inline IntVec invariant_factors(const TruncMatrix& g) {
  const int n = g.n;
  auto work = g.a;
  IntVec factors;
  for (int k = 0; k < n; ++k) {
    int bi = -1, bj = -1;
    long long bv = 0;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        auto v = work[i][j].valuation();
        if (v && (bi < 0 || *v < bv)) {
          bv = *v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) throw truncation_error("invariant_factors: pivot valuation not determined at this precision");
    // entries without a witnessed valuation must still be certifiably no
    // smaller than the pivot, or the pivot choice itself is unsound
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j)
        if (!work[i][j].valuation() && work[i][j].prec() < bv)
          throw truncation_error("invariant_factors: an entry could hide a valuation below the pivot");
    std::swap(work[bi], work[k]);
    for (int i = 0; i < n; ++i) std::swap(work[i][bj], work[i][k]);
    TruncSeries pivot_inv = work[k][k].invert();
    for (int i = k + 1; i < n; ++i) {
      TruncSeries f = work[i][k] * pivot_inv;
      for (int j = k; j < n; ++j) work[i][j] = work[i][j] - f * work[k][j];
    }
    for (int j = k + 1; j < n; ++j) {
      TruncSeries f = work[k][j] * pivot_inv;
      for (int i = k; i < n; ++i) work[i][j] = work[i][j] - f * work[i][k];
    }
    factors.push_back(bv);
  }
  std::sort(factors.rbegin(), factors.rend());
  return factors;
}

// ---------------------------------------------------------------------------
// Exhaustive stratum tally over F_p coset representatives.

struct TallyRow {
  SigmaClass cls;
  LaurentPoly predicted_poly;
  long long predicted = 0;
  long long observed = 0;
};

struct TallyReport {
  long long p = 0;
  int level = 0;  // truncation level M of the enumeration
  std::vector<TallyRow> rows;
  long long total = 0;
  long long expected_total = 0;
  bool counts_match = true;       // per-class predicted == observed
  bool total_match = true;
  bool patterns_match = true;     // matrix class == valuation-pattern class, pointwise
  bool invariant_factors_match = true;  // always the sorted mu

  bool ok() const {
    return counts_match && total_match && patterns_match && invariant_factors_match;
  }
};

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

namespace detail {

inline void require_gl(const RootDatum& d) {
  if (d.name.rfind("GL", 0) != 0 || d.sigma_order != 1)
    throw std::invalid_argument("the matrix oracle only models split GL_n presets");
}

}  // namespace detail

/// Enumerate all q^{M(n-1)} coordinate tuples of polynomial degree < M,
/// classify every point two ways, and compare per-stratum counts with the
/// exact point-count formula at q = p.
inline TallyReport tally_strata(const RootDatum& d, const Cochar& mu, long long p, int M) {
  detail::require_gl(d);
  if (!is_prime(p)) throw std::invalid_argument("tally_strata: q must be prime");
  if (M < 1) throw std::invalid_argument("tally_strata: truncation level must be positive");
  const int n = d.rank;
  const int r = n - 1;
  IntVec mu_int = to_intvec(mu.c);

  auto classes = kottwitz_set(d, mu);
  TallyReport rep;
  rep.p = p;
  rep.level = M;
  std::map<SigmaClass, int> index;
  for (const auto& b : classes) {
    TallyRow row;
    row.cls = b;
    row.predicted_poly = point_count(d, mu, b, M);  // throws if M is below a ceiling
    Rat val = row.predicted_poly.eval(p);
    if (!rat_is_integer(val)) throw std::logic_error("point count did not evaluate to an integer");
    row.predicted = val.numerator();
    index[b] = static_cast<int>(rep.rows.size());
    rep.rows.push_back(std::move(row));
  }

  long long sum_mu = 0;
  for (long long m : mu_int) sum_mu += std::llabs(m);
  // elementary-divisor elimination spends up to 2v of window per pivot of
  // valuation v, so budget well past 2 * |mu| in total
  const int prec = M + 3 * static_cast<int>(sum_mu) + 4;

  IntVec sorted_mu = mu_int;
  std::sort(sorted_mu.rbegin(), sorted_mu.rend());

  long long tuples = 1;
  for (int i = 0; i < M * r; ++i) tuples *= p;
  rep.expected_total = tuples;

  std::map<std::vector<std::optional<long long>>, SigmaClass> pattern_cache;
  std::vector<long long> digits(static_cast<std::size_t>(M) * r, 0);
  for (long long it = 0; it < tuples; ++it) {
    std::vector<TruncSeries> coords;
    std::vector<std::optional<long long>> pattern(r);
    for (int i = 0; i < r; ++i) {
      std::vector<long long> poly(digits.begin() + static_cast<long long>(i) * M,
                                  digits.begin() + static_cast<long long>(i + 1) * M);
      std::optional<long long> v;
      for (int k = 0; k < M; ++k)
        if (poly[k] != 0) {
          v = k;
          break;
        }
      pattern[i] = v;
      coords.push_back(TruncSeries::from_poly(p, poly, prec));
    }

    TruncMatrix g = cross_section_matrix(n, mu_int, coords);
    SigmaClass by_matrix = classify_matrix(d, g);

    auto cached = pattern_cache.find(pattern);
    if (cached == pattern_cache.end())
      cached = pattern_cache.emplace(pattern, classify_valuation_pattern(d, mu, pattern)).first;
    if (!(cached->second == by_matrix)) rep.patterns_match = false;

    if (invariant_factors(g) != sorted_mu) rep.invariant_factors_match = false;

    auto at = index.find(by_matrix);
    if (at == index.end()) {
      rep.counts_match = false;  // a point fell outside B(G, mu): hard failure
    } else {
      ++rep.rows[at->second].observed;
    }
    ++rep.total;

    // odometer
    std::size_t t = 0;
    while (t < digits.size() && digits[t] == p - 1) {
      digits[t] = 0;
      ++t;
    }
    if (t < digits.size()) ++digits[t];
  }

  for (const auto& row : rep.rows)
    if (row.predicted != row.observed) rep.counts_match = false;
  rep.total_match = rep.total == rep.expected_total;
  return rep;
}

}  // namespace loopcross
