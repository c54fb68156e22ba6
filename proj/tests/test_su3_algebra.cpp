#include <cmath>
#include <set>
#include <stdexcept>

#include "catch_amalgamated.hpp"
#include "trilevel/su3_algebra.hpp"

using namespace trilevel;

namespace {

ComplexMatrix3 unit(std::size_t row, std::size_t col) {
  ComplexMatrix3 m;
  m(row, col) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("Gell-Mann matrices match the standard basis", "[su3]") {
  CHECK(gell_mann(3) == ComplexMatrix3::diagonal(1.0, -1.0, 0.0));
  const double r3 = 1.0 / std::sqrt(3.0);
  CHECK(max_abs_diff(gell_mann(8), ComplexMatrix3::diagonal(r3, r3, -2.0 * r3)) == 0.0);
  CHECK(gell_mann(2)(0, 1) == Complex(0.0, -1.0));
  CHECK(gell_mann(5)(2, 0) == Complex(0.0, 1.0));
  CHECK(gell_mann(7)(1, 2) == Complex(0.0, -1.0));
}

TEST_CASE("Gell-Mann index outside 1..8 is a domain error", "[su3][errors]") {
  CHECK_THROWS_AS(gell_mann(0), std::domain_error);
  CHECK_THROWS_AS(gell_mann(9), std::domain_error);
  CHECK_THROWS_AS(structure_constants().f(1, 2, 0), std::domain_error);
}

TEST_CASE("Gell-Mann matrices are hermitian, traceless and orthogonal", "[su3]") {
  for (int i = 1; i <= 8; ++i) {
    CHECK(gell_mann(i).is_hermitian(0.0));
    CHECK(std::abs(gell_mann(i).trace()) <= 1e-15);
    for (int j = 1; j <= 8; ++j) {
      const Complex tr = (gell_mann(i) * gell_mann(j)).trace();
      CHECK(std::abs(tr - (i == j ? 2.0 : 0.0)) <= 1e-15);
    }
  }
}

TEST_CASE("shift operators are single-entry ladders in the (|3>,|2>,|1>) basis", "[su3]") {
  const ShiftOperators s = shift_operators();
  CHECK(s.t_plus == unit(0, 1));
  CHECK(s.u_plus == unit(1, 2));
  CHECK(s.v_plus == unit(0, 2));
  CHECK(s.t_minus == s.t_plus.adjoint());
  CHECK(s.u_minus == s.u_plus.adjoint());
  CHECK(s.v_minus == s.v_plus.adjoint());
  CHECK(max_abs_diff(s.t3, ComplexMatrix3::diagonal(1.0, -1.0, 0.0)) <= 1e-15);
  CHECK(max_abs_diff(s.u3, ComplexMatrix3::diagonal(0.0, 1.0, -1.0)) <= 1e-15);
  CHECK(max_abs_diff(s.v3, ComplexMatrix3::diagonal(1.0, 0.0, -1.0)) <= 1e-15);
  CHECK(max_abs_diff(commutator(s.t_plus, s.t_minus), s.t3) == 0.0);
}

TEST_CASE("structure constants reproduce the tabulated nonzero values", "[su3]") {
  const StructureConstants sc = structure_constants();
  const double h = 0.5;
  const double r3 = std::sqrt(3.0);

  // Literature values; every other entry that is not an index permutation
  // of these vanishes.
  const std::vector<std::tuple<int, int, int, double>> f_table{
      {1, 2, 3, 1.0}, {1, 4, 7, h},  {1, 5, 6, -h}, {2, 4, 6, h},       {2, 5, 7, h},
      {3, 4, 5, h},   {3, 6, 7, -h}, {4, 5, 8, r3 / 2}, {6, 7, 8, r3 / 2}};
  const std::vector<std::tuple<int, int, int, double>> d_table{
      {1, 1, 8, 1 / r3},  {2, 2, 8, 1 / r3},  {3, 3, 8, 1 / r3},        {8, 8, 8, -1 / r3},
      {1, 4, 6, h},       {1, 5, 7, h},       {2, 4, 7, -h},            {2, 5, 6, h},
      {3, 4, 4, h},       {3, 5, 5, h},       {3, 6, 6, -h},            {3, 7, 7, -h},
      {4, 4, 8, -0.5 / r3}, {5, 5, 8, -0.5 / r3}, {6, 6, 8, -0.5 / r3}, {7, 7, 8, -0.5 / r3}};

  double f_ref[9][9][9] = {};
  double d_ref[9][9][9] = {};
  for (const auto& [a, b, c, v] : f_table) {
    const int p[3] = {a, b, c};
    // Even permutations keep the sign, odd ones flip it.
    f_ref[p[0]][p[1]][p[2]] = v;
    f_ref[p[1]][p[2]][p[0]] = v;
    f_ref[p[2]][p[0]][p[1]] = v;
    f_ref[p[1]][p[0]][p[2]] = -v;
    f_ref[p[0]][p[2]][p[1]] = -v;
    f_ref[p[2]][p[1]][p[0]] = -v;
  }
  for (const auto& [a, b, c, v] : d_table) {
    const int p[3] = {a, b, c};
    d_ref[p[0]][p[1]][p[2]] = d_ref[p[1]][p[2]][p[0]] = d_ref[p[2]][p[0]][p[1]] = v;
    d_ref[p[1]][p[0]][p[2]] = d_ref[p[0]][p[2]][p[1]] = d_ref[p[2]][p[1]][p[0]] = v;
  }
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k) {
        INFO("i=" << i << " j=" << j << " k=" << k);
        CHECK(std::abs(sc.f(i, j, k) - f_ref[i][j][k]) <= 1e-15);
        CHECK(std::abs(sc.d(i, j, k) - d_ref[i][j][k]) <= 1e-15);
      }
}

TEST_CASE("f is antisymmetric and d symmetric under every index swap", "[su3][property]") {
  const StructureConstants sc = structure_constants();
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k) {
        CHECK(sc.f(i, j, k) == -sc.f(j, i, k));
        CHECK(sc.f(i, j, k) == -sc.f(i, k, j));
        CHECK(sc.f(i, j, k) == -sc.f(k, j, i));
        CHECK(sc.d(i, j, k) == sc.d(j, i, k));
        CHECK(sc.d(i, j, k) == sc.d(i, k, j));
        CHECK(sc.d(i, j, k) == sc.d(k, j, i));
      }
  CHECK(sc.f(1, 2, 3) == 1.0);
  CHECK(std::abs(sc.d(1, 1, 8) - 1.0 / std::sqrt(3.0)) <= 1e-16);
}

TEST_CASE("closed algebra report covers every relation within 1e-15", "[su3]") {
  const AlgebraReport report = verify_closed_algebra();
  REQUIRE(report.relations.size() == 22);
  std::set<std::string> names;
  for (const auto& r : report.relations) {
    INFO(r.name);
    CHECK(r.max_deviation <= kAlgebraTolerance);
    names.insert(r.name);
  }
  CHECK(names.size() == report.relations.size());
  CHECK(names.count("[U+,V-]=T-") == 1);
  CHECK(names.count("[T3,U±]=∓U±") == 1);
  CHECK(names.count("{λi,λj}=(4/3)δij+2 d_ijk λk") == 1);
  CHECK(report.all_within());
}

TEST_CASE("algebra report flags a violated relation", "[su3]") {
  AlgebraReport report = verify_closed_algebra();
  report.relations.push_back({"synthetic", 1e-3});
  CHECK_FALSE(report.all_within());
  CHECK(report.max_deviation() == 1e-3);
}
