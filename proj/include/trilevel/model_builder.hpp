#pragma once

// Semiclassical and quantized Hamiltonians of the three-level
// configurations, assembled from the su(3) shift operators.
//
// Units: hbar = 1, every frequency is an angular frequency. All matrices use
// the (|3>, |2>, |1>) ordering documented in matrix3.hpp.

#include <array>
#include <string>
#include <string_view>

#include "trilevel/matrix3.hpp"

namespace trilevel {

/// Which pair of shift operators carries the two field modes.
///   Lambda: (V, T)  transitions 1<->3, 3<->2
///   Vee:    (V, U)  transitions 3<->1, 1<->2
///   Cascade:(U, T)  transitions 1<->2, 2<->3
enum class Configuration { Lambda, Vee, Cascade };

std::string_view to_string(Configuration c);
/// Accepts "lambda", "vee", "cascade" (case-insensitive). Throws std::invalid_argument.
Configuration parse_configuration(std::string_view name);

/// Atomic frequencies; level energies follow from the configuration.
struct AtomParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
};

/// Classical bichromatic drive.
struct DriveParams {
  double big_omega1 = 0.0;
  double big_omega2 = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;

  void validate() const;  // kappa_i >= 0
};

/// Two quantized cavity modes.
struct CavityParams {
  double big_omega1 = 0.0;
  double big_omega2 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;

  void validate() const;  // g_i >= 0
};

struct DetuningSet {
  double delta1 = 0.0;
  double delta2 = 0.0;
  Configuration configuration = Configuration::Lambda;
};

/// Detunings of the two drive/mode frequencies from the configuration's
/// transition frequencies:
///   Lambda  D1 = 2w1 + w2 - W1,  D2 = w1 + 2w2 - W2
///   Vee     D1 = 2w1 + w2 - W1,  D2 = 2w2 + w1 - W2
///   Cascade D1 = 2w1 - w2 - W1,  D2 = 2w2 - w1 - W2
DetuningSet detunings(Configuration config, const AtomParams& atom, double big_omega1,
                      double big_omega2);

/// Inverse of detunings(): the field frequencies that realise (delta1, delta2).
std::array<double, 2> field_frequencies(Configuration config, const AtomParams& atom,
                                        double delta1, double delta2);

/// True when [H_I, H_II] = 0 is expected: D1 = -D2 (lambda, vee) or
/// D1 = D2 (cascade).
bool on_resonance_manifold(const DetuningSet& d, double tol = 1e-12);

/// Lab-frame Hamiltonian H_I + H_II at time t. Lambda and vee reproduce the
/// zero-detuning matrices with diagonals (w1+w2, -w2, -w1) and
/// (w1, w2, -w1-w2); cascade takes its unperturbed part verbatim from
///   H_I = (W1 + w2 - w1) U3 + (W2 + w1 - w2) T3,
/// whose prefactor signs differ from the lambda/vee pattern (W_i - w1 - w2).
ComplexMatrix3 semiclassical_hamiltonian(Configuration config, const AtomParams& atom,
                                         const DriveParams& drive, double t);

/// Atom-field product state |level; photons1, photons2>. Photon counts may
/// be -1 in formal manifold labels; such states carry zero coupling.
struct BareState {
  Level level = Level::One;
  int photons1 = 0;  // mode 1 (coupling g1)
  int photons2 = 0;  // mode 2 (coupling g2)
};

/// The three bare states coupled by the interaction in manifold (n, m), in
/// basis order (|3>, |2>, |1>):
///   Lambda  |n-1,m,3>, |n,m,2>, |n-1,m+1,1>   (first label = mode 2)
///   Vee     |n+1,m-1,3>, |n,m,2>, |n+1,m,1>   (first label = mode 2)
///   Cascade |n-1,m-1,3>, |n-1,m,2>, |n,m,1>   (first label = mode 1)
std::array<BareState, 3> coupled_triple(Configuration config, int n, int m);

/// Interaction block g1 (X+ a1 + h.c.) + g2 (Y+ a2 + h.c.) restricted to
/// coupled_triple(config, n, m). Zero diagonal, real symmetric.
///   Lambda: (3,2) = g2 sqrt(n), (3,1) = g1 sqrt(m+1)
///   Vee:    (3,1) = g1 sqrt(m), (2,1) = g2 sqrt(n+1)
///   Cascade:(3,2) = g2 sqrt(m), (2,1) = g1 sqrt(n)
/// Throws std::domain_error for negative photon counts.
ComplexMatrix3 quantized_block(Configuration config, const CavityParams& cavity, int n, int m);

/// Max entrywise |[H_I, H_II]| on the invariant triple of manifold (n, m).
///
/// The mode frequencies are the ones implied by `d` through
/// field_frequencies(); `cavity` supplies the couplings. H_I uses the same
/// unperturbed prefactors as the semiclassical model plus sum_j W_j a_j^+ a_j.
double commutation_check(Configuration config, const AtomParams& atom,
                         const CavityParams& cavity, const DetuningSet& d, int n, int m);

}  // namespace trilevel
