#pragma once

// Fundamental representation of su(3): Gell-Mann matrices, the T/U/V shift
// operators and the structure constants. Indices of the Gell-Mann basis are
// 1-based (1..8) everywhere in this interface.

#include <array>
#include <string>
#include <vector>

#include "trilevel/matrix3.hpp"

namespace trilevel {

/// Entrywise tolerance for the algebra checks. All matrix entries are built
/// from 0, +-1, +-1/2 and 1/sqrt(3), so deviations sit at machine epsilon.
inline constexpr double kAlgebraTolerance = 1e-15;

/// Gell-Mann matrix lambda_index. Throws std::domain_error outside 1..8.
ComplexMatrix3 gell_mann(int index);

/// Ladder and diagonal operators of the T, U and V subalgebras.
///
/// T couples |3> <-> |2>, V couples |3> <-> |1>, U couples |2> <-> |1>;
/// the "plus" operator raises towards the state with the smaller basis index.
struct ShiftOperators {
  ComplexMatrix3 t_plus, t_minus;
  ComplexMatrix3 u_plus, u_minus;
  ComplexMatrix3 v_plus, v_minus;
  ComplexMatrix3 t3, u3, v3;
};

ShiftOperators shift_operators();

/// f_ijk and d_ijk, computed from trace formulas rather than tabulated:
///   f_ijk = -(i/4) tr([l_i, l_j] l_k),   d_ijk = (1/4) tr({l_i, l_j} l_k).
class StructureConstants {
 public:
  StructureConstants();

  /// Antisymmetric constant f_ijk, indices 1..8.
  double f(int i, int j, int k) const;
  /// Symmetric constant d_ijk, indices 1..8.
  double d(int i, int j, int k) const;

 private:
  using Tensor = std::array<std::array<std::array<double, 8>, 8>, 8>;
  Tensor f_{};
  Tensor d_{};
};

StructureConstants structure_constants();

struct RelationCheck {
  std::string name;
  double max_deviation = 0.0;
};

struct AlgebraReport {
  std::vector<RelationCheck> relations;

  double max_deviation() const;
  bool all_within(double tol = kAlgebraTolerance) const;
};

/// Evaluates the 18 shift-operator commutation relations, both
/// (anti)commutator expansions in terms of f and d, the orthogonality
/// relation tr(l_i l_j) = 2 delta_ij, and hermiticity/tracelessness of the
/// basis. Deviations are reported, never thrown.
AlgebraReport verify_closed_algebra();

}  // namespace trilevel
