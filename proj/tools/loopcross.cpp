// Command-line front end: reproducible reports over the library.
//
// Subcommands:
//   bgmu      stratum table of B(G, mu)            (tsv | json)
//   shapes    stratum shapes as JSON
//   hasse     Hasse diagram of B(G, mu)            (dot)
//   identity  both exact q-identity reports        (json)
//   oracle    finite-field tally vs. point counts  (tsv | json)
//   cross     cross-section roots and Cross depth  (json)
//
// Exit status: 0 all checks pass, 1 a verification failed, 2 bad configuration.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "loopcross/loopcross.hpp"

namespace {

using namespace loopcross;

struct Options {
  std::string group;
  std::string mu_text;
  std::string format;
  std::string output;
  long long q = 3;
  int level = 1;
};

Cochar parse_mu(const RootDatum& d, const std::string& text) {
  IntVec coords;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw CLI::ValidationError("--mu", "empty coordinate");
      coords.push_back(std::stoll(cur));
      cur.clear();
    } else if (ch == '-' || (ch >= '0' && ch <= '9')) {
      cur += ch;
    } else {
      throw CLI::ValidationError("--mu", "coordinates must be integers");
    }
  }
  if (static_cast<int>(coords.size()) != d.rank)
    throw CLI::ValidationError("--mu", "expected " + std::to_string(d.rank) + " coordinates for " + d.name);
  return Cochar(coords);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw CLI::ValidationError("--output", "cannot open " + opt.output);
  out << text;
}

int run_bgmu(const Options& opt) {
  auto d = build_root_datum(opt.group);
  Cochar mu = parse_mu(d, opt.mu_text);
  if (opt.format == "json")
    emit(opt, stratum_table_json(d, mu).dump(2) + "\n");
  else
    emit(opt, stratum_table_tsv(d, mu));
  return 0;
}

int run_shapes(const Options& opt) {
  auto d = build_root_datum(opt.group);
  Cochar mu = parse_mu(d, opt.mu_text);
  json shapes = json::array();
  for (const auto& b : kottwitz_set(d, mu)) shapes.push_back(shape_to_json(stratum_shape(d, mu, b)));
  json j;
  j["group"] = d.name;
  j["mu"] = to_json(mu.c);
  j["shapes"] = shapes;
  emit(opt, j.dump(2) + "\n");
  return 0;
}

int run_hasse(const Options& opt) {
  auto d = build_root_datum(opt.group);
  Cochar mu = parse_mu(d, opt.mu_text);
  emit(opt, hasse_dot(d, mu));
  return 0;
}

int run_identity(const Options& opt) {
  auto d = build_root_datum(opt.group);
  Cochar mu = parse_mu(d, opt.mu_text);
  json j = identity_report_json(d, mu);
  emit(opt, j.dump(2) + "\n");
  bool ok = j["full"]["ok"].get<bool>() && j["irr"]["ok"].get<bool>();
  return ok ? 0 : 1;
}

int run_oracle(const Options& opt) {
  auto d = build_root_datum(opt.group);
  Cochar mu = parse_mu(d, opt.mu_text);
  TallyReport rep = tally_strata(d, mu, opt.q, opt.level);
  if (opt.format == "json")
    emit(opt, tally_json(d, mu, rep).dump(2) + "\n");
  else
    emit(opt, tally_tsv(rep));
  return rep.ok() ? 0 : 1;
}

int run_cross(const Options& opt) {
  auto d = build_root_datum(opt.group);
  emit(opt, cross_report_json(d).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton strata of loop Steinberg cross-sections"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_mu) {
    sub->add_option("--group", opt.group, "root datum preset, e.g. GL3 or 2A2")->required();
    if (needs_mu)
      sub->add_option("--mu", opt.mu_text, "comma-separated integral cocharacter")->required();
    sub->add_option("--format", opt.format, "output format");
    sub->add_option("--output", opt.output, "write the report to a file");
  };

  auto* bgmu = app.add_subcommand("bgmu", "stratum table of B(G, mu)");
  add_common(bgmu, true);
  auto* shapes = app.add_subcommand("shapes", "stratum shapes as JSON");
  add_common(shapes, true);
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram in DOT format");
  add_common(hasse, true);
  auto* identity = app.add_subcommand("identity", "verify both exact q-identities");
  add_common(identity, true);
  auto* oracle = app.add_subcommand("oracle", "finite-field tally against the point counts");
  add_common(oracle, true);
  oracle->add_option("--q", opt.q, "prime residue field size");
  oracle->add_option("--M", opt.level, "truncation level");
  auto* cross = app.add_subcommand("cross", "cross-section roots and Cross nilpotence depth");
  add_common(cross, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bgmu->parsed()) return run_bgmu(opt);
    if (shapes->parsed()) return run_shapes(opt);
    if (hasse->parsed()) return run_hasse(opt);
    if (identity->parsed()) return run_identity(opt);
    if (oracle->parsed()) return run_oracle(opt);
    if (cross->parsed()) return run_cross(opt);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json diag;
    diag["error"] = e.what();
    std::cerr << diag.dump() << "\n";
    return 1;
  }
  return 2;
}
