#pragma once

#include <sstream>

#include "json.hpp"
#include "loopcross/fq_oracle.hpp"

namespace loopcross {

using nlohmann::json;

inline json to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

/// Root datum as a JSON document, for debugging and cross-language fixtures.
/// Index-valued fields (sigma_perm, orbit_reps) are 1-based in the output.
inline json datum_to_json(const RootDatum& d) {
  json j;
  j["name"] = d.name;
  j["rank"] = d.rank;
  j["simple_roots"] = d.simple_roots;
  j["simple_coroots"] = d.simple_coroots;
  j["pairing"] = d.pairing;
  json perm = json::array();
  for (int x : d.sigma_perm) perm.push_back(x + 1);
  j["sigma_perm"] = perm;
  j["sigma_lattice"] = d.sigma_cochar;
  json reps = json::array();
  for (int x : d.orbit_reps) reps.push_back(x + 1);
  j["orbit_reps"] = reps;
  json orbs = json::array();
  for (const auto& orb : d.orbits) {
    json o = json::array();
    for (int x : orb) o.push_back(x + 1);
    orbs.push_back(o);
  }
  j["sigma_orbits"] = orbs;
  return j;
}

inline json class_to_json(const SigmaClass& b) {
  json j;
  j["kappa"] = b.kappa.residues;
  j["nu"] = to_json(b.nu.c);
  return j;
}

inline json shape_to_json(const StratumShape& s) {
  json j;
  j["nu"] = to_json(s.cls.nu.c);
  j["kappa"] = s.cls.kappa.residues;
  j["exponents"] = to_json(s.exponents);
  json kinds = json::array();
  for (CoordKind k : s.kinds) kinds.push_back(coord_kind_name(k));
  j["kinds"] = kinds;
  j["codim"] = s.codim();
  return j;
}

inline std::string orbit_set_str(const std::vector<int>& j) {
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(j[i] + 1);
  }
  return s + "}";
}

/// One row per class of B(G, mu): nu, kappa, J, exponents, codim, leng.
inline std::string stratum_table_tsv(const RootDatum& d, const Cochar& mu) {
  auto classes = kottwitz_set(d, mu);
  SigmaClass top = classes.front();
  std::ostringstream out;
  out << "nu\tkappa\tJ\texponents\tcodim\tleng\n";
  for (const auto& b : classes) {
    StratumShape s = stratum_shape(d, mu, b);
    out << vec_str(b.nu) << "\t" << vec_str(to_qvec(b.kappa.residues)) << "\t"
        << orbit_set_str(newton_support(d, b.nu)) << "\t" << vec_str(s.exponents) << "\t"
        << s.codim() << "\t" << poset_length(d, mu, top, b) << "\n";
  }
  return out.str();
}

inline json stratum_table_json(const RootDatum& d, const Cochar& mu) {
  auto classes = kottwitz_set(d, mu);
  SigmaClass top = classes.front();
  json rows = json::array();
  for (const auto& b : classes) {
    StratumShape s = stratum_shape(d, mu, b);
    json row = shape_to_json(s);
    json jorb = json::array();
    for (int i : newton_support(d, b.nu)) jorb.push_back(i + 1);
    row["J"] = jorb;
    row["leng"] = poset_length(d, mu, top, b);
    rows.push_back(row);
  }
  json j;
  j["group"] = d.name;
  j["mu"] = to_json(mu.c);
  j["classes"] = rows;
  return j;
}

/// Hasse diagram of B(G, mu) in DOT format; node labels carry nu and the
/// length rank, edges point from smaller to larger classes.
inline std::string hasse_dot(const RootDatum& d, const Cochar& mu) {
  auto classes = kottwitz_set(d, mu);
  SigmaClass top = classes.front();
  auto edges = hasse_diagram(d, classes);
  std::ostringstream out;
  out << "digraph bgmu {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "  n" << i << " [label=\"nu=" << vec_str(classes[i].nu)
        << " leng=" << poset_length(d, mu, top, classes[i]) << "\"];\n";
  }
  for (auto [lo, hi] : edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

inline json identity_term_json(const IdentityTerm& t) {
  json j;
  j["nu"] = to_json(t.cls.nu.c);
  j["j_size"] = t.j_size;
  j["leng"] = t.leng;
  j["term"] = t.term.str();
  return j;
}

inline json identity_report_json(const RootDatum& d, const Cochar& mu) {
  auto full = full_sum_identity(d, mu);
  auto irr = irreducible_sum_identity(d, mu);
  json j;
  j["group"] = d.name;
  j["mu"] = to_json(mu.c);
  json f;
  f["terms"] = json::array();
  for (const auto& t : full.terms) f["terms"].push_back(identity_term_json(t));
  f["sum"] = full.sum.str();
  f["ok"] = full.ok;
  j["full"] = f;
  json g;
  g["applicable"] = irr.applicable;
  g["terms"] = json::array();
  for (const auto& t : irr.terms) g["terms"].push_back(identity_term_json(t));
  g["sum"] = irr.applicable ? irr.sum.str() : "n/a";
  g["ok"] = irr.ok;
  j["irr"] = g;
  return j;
}

inline std::string tally_tsv(const TallyReport& rep) {
  std::ostringstream out;
  out << "class\tpredicted\tobserved\n";
  for (const auto& row : rep.rows)
    out << vec_str(row.cls.nu) << "\t" << row.predicted << "\t" << row.observed << "\n";
  out << "total\t" << rep.expected_total << "\t" << rep.total << "\n";
  return out.str();
}

inline json tally_json(const RootDatum& d, const Cochar& mu, const TallyReport& rep) {
  json j;
  j["group"] = d.name;
  j["mu"] = to_json(mu.c);
  j["q"] = rep.p;
  j["M"] = rep.level;
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json x = class_to_json(row.cls);
    x["predicted"] = row.predicted;
    x["observed"] = row.observed;
    x["count_poly"] = row.predicted_poly.str();
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["total"] = rep.total;
  j["expected_total"] = rep.expected_total;
  j["counts_match"] = rep.counts_match;
  j["total_match"] = rep.total_match;
  j["patterns_match"] = rep.patterns_match;
  j["invariant_factors_match"] = rep.invariant_factors_match;
  j["ok"] = rep.ok();
  return j;
}

inline json cross_report_json(const RootDatum& d) {
  json j;
  j["group"] = d.name;
  auto betas = cross_section_roots(d);
  json b = json::array();
  for (const auto& x : betas) b.push_back(to_json(x.c));
  j["cross_section_roots"] = b;
  j["nilpotence_depth"] = cross_nilpotence_depth(d);
  return j;
}

}  // namespace loopcross
