#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "loopcross/linalg.hpp"

using namespace loopcross;

namespace {

Rat int_mat_det(const IntMat& a) {
  QMat q(a.size(), QVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) q[i][j] = Rat(a[i][j]);
  // elimination determinant
  Rat det(1);
  const std::size_t n = q.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && q[sel][col] == Rat(0)) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      std::swap(q[sel], q[col]);
      det = -det;
    }
    det *= q[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (q[i][col] == Rat(0)) continue;
      Rat f = q[i][col] / q[col][col];
      for (std::size_t j = col; j < n; ++j) q[i][j] -= f * q[col][j];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("solve_linear finds the unique solution of a regular system") {
  QMat a{{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
  QVec b{Rat(5), Rat(10)};
  auto sol = solve_linear(a, b);
  REQUIRE(sol);
  CHECK(sol->unique);
  CHECK(sol->x == QVec{Rat(1), Rat(3)});
}

TEST_CASE("solve_linear reports inconsistency") {
  QMat a{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  CHECK_FALSE(solve_linear(a, {Rat(1), Rat(3)}).has_value());
  auto sol = solve_linear(a, {Rat(1), Rat(2)});
  REQUIRE(sol);
  CHECK_FALSE(sol->unique);
}

TEST_CASE("smith form on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dim(1, 5), ent(-6, 6);
  for (int iter = 0; iter < 200; ++iter) {
    int m = dim(rng), n = dim(rng);
    IntMat a(m, IntVec(n));
    for (auto& row : a)
      for (auto& x : row) x = ent(rng);
    SmithForm f = smith_form(a);

    IntMat lhs = int_mat_mul(int_mat_mul(f.left, a), f.right);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        long long want = (i == j && i < static_cast<int>(f.divisors.size())) ? f.divisors[i] : 0;
        REQUIRE(lhs[i][j] == want);
      }
    for (std::size_t i = 0; i + 1 < f.divisors.size(); ++i) {
      if (f.divisors[i + 1] != 0) {
        REQUIRE(f.divisors[i] != 0);
        REQUIRE(f.divisors[i + 1] % f.divisors[i] == 0);
      }
    }
    Rat dl = int_mat_det(f.left), dr = int_mat_det(f.right);
    REQUIRE((dl == Rat(1) || dl == Rat(-1)));
    REQUIRE((dr == Rat(1) || dr == Rat(-1)));
  }
}

TEST_CASE("integral solve via smith form") {
  IntMat a{{2, 0}, {0, 3}};
  auto f = smith_form(a);
  auto y = solve_integer(f, {4, 9});
  REQUIRE(y);
  CHECK(int_mat_vec(a, *y) == IntVec{4, 9});
  CHECK_FALSE(solve_integer(f, {1, 0}).has_value());
}

TEST_CASE("integer kernel of a rank-one matrix") {
  IntMat a{{1, -1}};
  auto k = integer_kernel(a);
  REQUIRE(k.size() == 1);
  CHECK(int_mat_vec(a, k[0]) == IntVec{0});
  CHECK((k[0] == IntVec{1, 1} || k[0] == IntVec{-1, -1}));
}
