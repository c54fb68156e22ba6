#include "trilevel/su3_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trilevel {

namespace {

ComplexMatrix3 make(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix3 m;
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

const std::array<ComplexMatrix3, 8>& gell_mann_table() {
  static const std::array<ComplexMatrix3, 8> table = [] {
    const Complex i = kI;
    const double r3 = 1.0 / std::sqrt(3.0);
    return std::array<ComplexMatrix3, 8>{
        make({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}),
        make({{0, -i, 0}, {i, 0, 0}, {0, 0, 0}}),
        make({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}),
        make({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}),
        make({{0, 0, -i}, {0, 0, 0}, {i, 0, 0}}),
        make({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
        make({{0, 0, 0}, {0, 0, -i}, {0, i, 0}}),
        make({{r3, 0, 0}, {0, r3, 0}, {0, 0, -2.0 * r3}}),
    };
  }();
  return table;
}

void check_index(int index) {
  if (index < 1 || index > 8)
    throw std::domain_error("Gell-Mann index must lie in 1..8, got " + std::to_string(index));
}

}  // namespace

ComplexMatrix3 gell_mann(int index) {
  check_index(index);
  return gell_mann_table()[static_cast<std::size_t>(index - 1)];
}

ShiftOperators shift_operators() {
  const auto l = [](int k) { return gell_mann(k); };
  const double s3 = std::sqrt(3.0);
  ShiftOperators s;
  s.t_plus = 0.5 * (l(1) + kI * l(2));
  s.t_minus = 0.5 * (l(1) - kI * l(2));
  s.u_plus = 0.5 * (l(6) + kI * l(7));
  s.u_minus = 0.5 * (l(6) - kI * l(7));
  s.v_plus = 0.5 * (l(4) + kI * l(5));
  s.v_minus = 0.5 * (l(4) - kI * l(5));
  s.t3 = l(3);
  s.u3 = 0.5 * (s3 * l(8) - l(3));
  s.v3 = 0.5 * (s3 * l(8) + l(3));
  return s;
}

StructureConstants::StructureConstants() {
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      const ComplexMatrix3 comm = commutator(gell_mann(i), gell_mann(j));
      const ComplexMatrix3 anti = anticommutator(gell_mann(i), gell_mann(j));
      for (int k = 1; k <= 8; ++k) {
        const Complex fc = -0.25 * kI * (comm * gell_mann(k)).trace();
        const Complex dc = 0.25 * (anti * gell_mann(k)).trace();
        f_[i - 1][j - 1][k - 1] = fc.real();
        d_[i - 1][j - 1][k - 1] = dc.real();
      }
    }
  }
}

double StructureConstants::f(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  return f_[i - 1][j - 1][k - 1];
}

double StructureConstants::d(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  return d_[i - 1][j - 1][k - 1];
}

StructureConstants structure_constants() { return StructureConstants{}; }

double AlgebraReport::max_deviation() const {
  double m = 0.0;
  for (const auto& r : relations) m = std::max(m, r.max_deviation);
  return m;
}

bool AlgebraReport::all_within(double tol) const {
  return std::all_of(relations.begin(), relations.end(),
                     [tol](const RelationCheck& r) { return r.max_deviation <= tol; });
}

AlgebraReport verify_closed_algebra() {
  const ShiftOperators s = shift_operators();
  AlgebraReport report;

  const auto add = [&report](std::string name, double dev) {
    report.relations.push_back({std::move(name), dev});
  };
  const auto dev = [](const ComplexMatrix3& lhs, const ComplexMatrix3& rhs) {
    return max_abs_diff(lhs, rhs);
  };
  // "[A,B±]=±c B±" relations are checked for both signs and reported once.
  const auto pm = [&](const ComplexMatrix3& a, const ComplexMatrix3& bp, const ComplexMatrix3& bm,
                      double c) {
    return std::max(dev(commutator(a, bp), c * bp), dev(commutator(a, bm), -c * bm));
  };

  add("[U+,U-]=U3", dev(commutator(s.u_plus, s.u_minus), s.u3));
  add("[V+,V-]=V3", dev(commutator(s.v_plus, s.v_minus), s.v3));
  add("[T+,T-]=T3", dev(commutator(s.t_plus, s.t_minus), s.t3));

  add("[T3,T±]=±2T±", pm(s.t3, s.t_plus, s.t_minus, 2.0));
  add("[T3,U±]=∓U±", pm(s.t3, s.u_plus, s.u_minus, -1.0));
  add("[T3,V±]=±V±", pm(s.t3, s.v_plus, s.v_minus, 1.0));

  add("[V3,T±]=±T±", pm(s.v3, s.t_plus, s.t_minus, 1.0));
  add("[V3,U±]=±U±", pm(s.v3, s.u_plus, s.u_minus, 1.0));
  add("[V3,V±]=±2V±", pm(s.v3, s.v_plus, s.v_minus, 2.0));

  add("[U3,T±]=∓T±", pm(s.u3, s.t_plus, s.t_minus, -1.0));
  add("[U3,U±]=±2U±", pm(s.u3, s.u_plus, s.u_minus, 2.0));
  add("[U3,V±]=±V±", pm(s.u3, s.v_plus, s.v_minus, 1.0));

  add("[T+,V-]=-U-", dev(commutator(s.t_plus, s.v_minus), -1.0 * s.u_minus));
  add("[T+,U+]=V+", dev(commutator(s.t_plus, s.u_plus), s.v_plus));
  add("[U+,V-]=T-", dev(commutator(s.u_plus, s.v_minus), s.t_minus));
  add("[T-,V+]=U+", dev(commutator(s.t_minus, s.v_plus), s.u_plus));
  add("[T-,U-]=-V-", dev(commutator(s.t_minus, s.u_minus), -1.0 * s.v_minus));
  add("[U-,V+]=-T+", dev(commutator(s.u_minus, s.v_plus), -1.0 * s.t_plus));

  const StructureConstants sc;
  double comm_dev = 0.0;
  double anti_dev = 0.0;
  double ortho_dev = 0.0;
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      ComplexMatrix3 comm_rhs;
      ComplexMatrix3 anti_rhs = ComplexMatrix3::identity() * (i == j ? 4.0 / 3.0 : 0.0);
      for (int k = 1; k <= 8; ++k) {
        comm_rhs += (2.0 * kI * sc.f(i, j, k)) * gell_mann(k);
        anti_rhs += (2.0 * sc.d(i, j, k)) * gell_mann(k);
      }
      comm_dev = std::max(comm_dev, dev(commutator(gell_mann(i), gell_mann(j)), comm_rhs));
      anti_dev = std::max(anti_dev, dev(anticommutator(gell_mann(i), gell_mann(j)), anti_rhs));
      const Complex tr = (gell_mann(i) * gell_mann(j)).trace();
      ortho_dev = std::max(ortho_dev, std::abs(tr - (i == j ? 2.0 : 0.0)));
    }
  }
  add("[λi,λj]=2i f_ijk λk", comm_dev);
  add("{λi,λj}=(4/3)δij+2 d_ijk λk", anti_dev);
  add("tr(λi λj)=2δij", ortho_dev);

  double herm_dev = 0.0;
  for (int i = 1; i <= 8; ++i) {
    const ComplexMatrix3 g = gell_mann(i);
    herm_dev = std::max({herm_dev, max_abs_diff(g, g.adjoint()), std::abs(g.trace())});
  }
  add("λi hermitian and traceless", herm_dev);
  return report;
}

}  // namespace trilevel
