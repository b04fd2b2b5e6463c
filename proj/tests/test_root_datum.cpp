#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "loopcross/root_datum.hpp"

using namespace loopcross;

namespace {

const std::vector<std::string> kAllPresets = {
    "GL1", "GL2", "GL3", "GL4",  "SL2", "SL3",  "SL4", "PGL2", "PGL3", "A2",  "A2ad",
    "B2",  "B3",  "C2",  "C3",   "D4",  "D4ad", "G2",  "F4",   "2A2",  "2A3", "3D4",
    "2D4", "B4",  "C4",  "A3ad", "SL5", "PGL5"};

Cochar cc(std::initializer_list<long long> v) { return Cochar(IntVec(v)); }

}  // namespace

TEST_CASE("GL2 preset coordinates") {
  auto d = build_root_datum("GL2");
  CHECK(d.rank == 2);
  REQUIRE(d.num_simple == 1);
  CHECK(d.simple_roots[0] == IntVec{1, -1});
  CHECK(d.simple_coroots[0] == IntVec{1, -1});
  CHECK(d.sigma_order == 1);
  CHECK(d.num_orbits() == 1);
}

TEST_CASE("GL3 preset coordinates") {
  auto d = build_root_datum("GL3");
  CHECK(d.rank == 3);
  REQUIRE(d.num_simple == 2);
  CHECK(d.simple_roots[0] == IntVec{1, -1, 0});
  CHECK(d.simple_roots[1] == IntVec{0, 1, -1});
  CHECK(d.num_orbits() == 2);
}

TEST_CASE("twisted A2 preset") {
  auto d = build_root_datum("2A2");
  CHECK(d.num_simple == 2);
  CHECK(d.sigma_perm == std::vector<int>{1, 0});
  CHECK(d.num_orbits() == 1);
  CHECK(d.sigma_order == 2);
}

TEST_CASE("every catalogued preset builds") {
  const auto& names = known_presets();
  CHECK(names.size() > 30);
  for (const auto& name : names) CHECK_NOTHROW(build_root_datum(name));
  CHECK(std::count(names.begin(), names.end(), "GL6") == 1);
  CHECK(std::count(names.begin(), names.end(), "3D4") == 1);
  CHECK(std::count(names.begin(), names.end(), "F4") == 1);
}

TEST_CASE("invalid presets are rejected") {
  CHECK_THROWS_AS(build_root_datum("XX7"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("GL99"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("2B2"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("3A3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("2A1"), std::invalid_argument);
}

TEST_CASE("sigma orbits") {
  CHECK(sigma_orbits(build_root_datum("GL3")) ==
        std::vector<std::vector<int>>{{0}, {1}});
  CHECK(sigma_orbits(build_root_datum("2A2")) == std::vector<std::vector<int>>{{0, 1}});
  CHECK(sigma_orbits(build_root_datum("3D4")) ==
        std::vector<std::vector<int>>{{0, 2, 3}, {1}});
}

TEST_CASE("orbit weights") {
  auto gl2 = build_root_datum("GL2");
  CHECK(orbit_weight(gl2, 0).c == QVec{Rat(1, 2), Rat(-1, 2)});

  auto gl3 = build_root_datum("GL3");
  CHECK(orbit_weight(gl3, 0).c == QVec{Rat(2, 3), Rat(-1, 3), Rat(-1, 3)});

  // 2A2: the orbit weight is the sum root_1 + root_2
  auto tw = build_root_datum("2A2");
  Charv expect(to_qvec(tw.simple_roots[0]));
  for (int a = 0; a < tw.rank; ++a) expect[a] += Rat(tw.simple_roots[1][a]);
  CHECK(orbit_weight(tw, 0) == expect);

  CHECK_THROWS_AS(orbit_weight(gl2, 1), std::invalid_argument);
}

TEST_CASE("orbit weight duality and sigma invariance") {
  for (const auto& name : kAllPresets) {
    auto d = build_root_datum(name);
    for (int i = 0; i < d.num_orbits(); ++i) {
      const Charv& w = orbit_weight(d, i);
      for (int j = 0; j < d.num_simple; ++j) {
        Rat v = pairing_with_coroot(d, j, w);
        CHECK(v == (d.orbit_of[j] == i ? Rat(1) : Rat(0)));
      }
      CHECK(act_sigma(d, w) == w);
    }
  }
}

TEST_CASE("sigma intertwines the simple reflections") {
  for (const auto& name : kAllPresets) {
    auto d = build_root_datum(name);
    for (int j = 0; j < d.num_simple; ++j) {
      IntMat lhs = int_mat_mul(d.sigma_cochar, word_matrix(d, {j}));
      IntMat rhs = int_mat_mul(word_matrix(d, {d.sigma_perm[j]}), d.sigma_cochar);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pairing is sigma invariant on lattice bases") {
  for (const auto& name : kAllPresets) {
    auto d = build_root_datum(name);
    for (int a = 0; a < d.rank; ++a)
      for (int b = 0; b < d.rank; ++b) {
        Cochar ea;
        ea.c.assign(d.rank, Rat(0));
        ea[a] = 1;
        Charv eb;
        eb.c.assign(d.rank, Rat(0));
        eb[b] = 1;
        CHECK(pair(d, act_sigma(d, ea), act_sigma(d, eb)) == pair(d, ea, eb));
      }
  }
}

TEST_CASE("dominant representative examples") {
  auto gl2 = build_root_datum("GL2");
  auto [v1, w1] = dominant_representative(gl2, cc({0, 1}));
  CHECK(v1 == cc({1, 0}));
  CHECK(w1 == WeylWord{0});

  auto gl3 = build_root_datum("GL3");
  Cochar central(QVec{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  auto [v2, w2] = dominant_representative(gl3, central);
  CHECK(v2 == central);
  CHECK(w2.empty());

  auto [v3, w3] = dominant_representative(gl3, cc({0, 1, 0}));
  CHECK(v3 == cc({1, 0, 0}));
  CHECK(act_word(gl3, w3, cc({0, 1, 0})) == v3);
}

TEST_CASE("dominant representative is W-invariant and idempotent") {
  std::mt19937 rng(7);
  for (const auto& name : {"GL3", "B2", "G2", "2A3", "D4", "C3"}) {
    auto d = build_root_datum(name);
    std::uniform_int_distribution<long long> coord(-4, 4);
    std::uniform_int_distribution<int> refl(0, d.num_simple - 1);
    for (int iter = 0; iter < 25; ++iter) {
      IntVec raw(d.rank);
      for (auto& x : raw) x = coord(rng);
      Cochar v(raw);
      Cochar dom = dominant_representative(d, v).first;
      CHECK(is_dominant(d, dom));
      CHECK(dominant_representative(d, dom).first == dom);
      WeylWord w;
      for (int k = 0; k < 6; ++k) w.push_back(refl(rng));
      CHECK(dominant_representative(d, act_word(d, w, v)).first == dom);
      // the recorded word really maps the input to the representative
      auto [vv, ww] = dominant_representative(d, v);
      CHECK(act_word(d, ww, v) == vv);
    }
  }
}

TEST_CASE("coxeter element") {
  CHECK(coxeter_element(build_root_datum("GL2")) == WeylWord{0});
  CHECK(coxeter_element(build_root_datum("GL3")) == WeylWord{0, 1});
  CHECK(coxeter_element(build_root_datum("2A2")) == WeylWord{0});
}

TEST_CASE("positive roots counts") {
  CHECK(build_root_datum("GL3").positive_roots.size() == 3);
  CHECK(build_root_datum("B2").positive_roots.size() == 4);
  CHECK(build_root_datum("G2").positive_roots.size() == 6);
  CHECK(build_root_datum("D4").positive_roots.size() == 12);
  CHECK(build_root_datum("F4").positive_roots.size() == 24);
}

TEST_CASE("weyl group sizes") {
  CHECK(build_root_datum("GL3").weyl_actions.size() == 6);
  CHECK(build_root_datum("B2").weyl_actions.size() == 8);
  CHECK(build_root_datum("G2").weyl_actions.size() == 12);
  CHECK(build_root_datum("D4").weyl_actions.size() == 192);
  CHECK(build_root_datum("F4").weyl_actions.size() == 1152);
}
