#pragma once

// Closed-form level populations of the resonant lambda and vee systems, for
// a classical bichromatic drive and for two quantized modes in a number
// state, plus the dressed-basis propagator of the quantized model.

#include <array>
#include <stdexcept>

#include "trilevel/matrix3.hpp"
#include "trilevel/model_builder.hpp"

namespace trilevel {

/// Populations of levels |1>, |2>, |3>.
struct ProbabilityTriple {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  double sum() const { return p1 + p2 + p3; }
  double of(Level level) const;
};

/// |C|^2 of an amplitude triple in (|3>, |2>, |1>) order.
ProbabilityTriple probabilities_of(const Amplitudes& a);

/// Couplings of the two transitions that share the fully coupled level:
/// k1 belongs to mode 1, k2 to mode 2. Semiclassically these are kappa1,
/// kappa2; in manifold (n, m) they pick up the photon-number factors.
struct EffectiveCouplings {
  double k1 = 0.0;
  double k2 = 0.0;

  /// sqrt(k1^2 + k2^2).
  double rabi() const;
};

/// Closed-form populations for coupling pair `k`, starting in `initial`.
/// With W = sqrt(k1^2 + k2^2) the lambda system reads, for initial level 1,
///   p1 = (k2^2 + k1^2 cos Wt)^2 / W^4
///   p2 = 4 k1^2 k2^2 sin^4(Wt/2) / W^4
///   p3 = k1^2 sin^2(Wt) / W^2
/// and the other five (configuration, level) cases follow the same table.
/// W = 0 freezes the initial distribution. Cascade throws std::invalid_argument.
ProbabilityTriple closed_form_probabilities(Configuration config, EffectiveCouplings k,
                                            Level initial, double t);

/// Generalized Rabi frequency sqrt(kappa1^2 + kappa2^2).
double rabi_frequency(double kappa1, double kappa2);

/// Resonant classical drive. Throws std::domain_error for negative couplings.
ProbabilityTriple semiclassical_probabilities(Configuration config, double kappa1, double kappa2,
                                              Level initial, double t);

/// Photon-dressed couplings of manifold (n, m):
///   Lambda: k1 = g1 sqrt(m+1), k2 = g2 sqrt(n)
///   Vee:    k1 = g1 sqrt(m),   k2 = g2 sqrt(n+1)
/// Throws std::domain_error for negative n, m or couplings.
EffectiveCouplings quantized_couplings(Configuration config, const CavityParams& cavity, int n,
                                       int m);

/// Omega_nm, the nonzero eigenvalue magnitude of the manifold block.
double manifold_frequency(Configuration config, const CavityParams& cavity, int n, int m);

/// Thrown when a manifold has no coupling at all (Omega_nm = 0), so the
/// dressed basis is undefined. The dynamics there is frozen.
class DegenerateManifoldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rotation T from the bare triple to the dressed states.
///
/// Row k of `rotation` is the dressed eigenvector with eigenvalue
/// `eigenvalues[k]`; the rows are ordered (+Omega, 0, -Omega), matching the
/// phase factors exp(-i Omega t), 1, exp(+i Omega t) of the propagator.
struct DressedBasis {
  std::array<double, 3> eigenvalues{};
  RealMatrix3 rotation{};
  std::array<double, 3> euler_angles{};  // (theta1, theta2, theta3), radians
  double omega = 0.0;
};

/// Throws DegenerateManifoldError when Omega_nm = 0.
DressedBasis dressed_basis(Configuration config, const CavityParams& cavity, int n, int m);

/// z-x-z Euler rotation
///   [ c3c2 - c1s2s3   c3s2 + c1c2s3   s3s1 ]
///   [-s3c2 - c1s2c3  -s3s2 + c1c2c3   c3s1 ]
///   [ s1s2           -s1c2            c1   ]
/// with s_i = sin(theta_i), c_i = cos(theta_i).
RealMatrix3 euler_rotation(double theta1, double theta2, double theta3);

/// T^T diag(e^{-i Omega t}, 1, e^{i Omega t}) T applied to `initial`.
/// Throws std::invalid_argument unless |initial|^2 = 1 within 1e-12.
/// A degenerate manifold returns `initial` unchanged.
Amplitudes quantized_amplitudes(Configuration config, const CavityParams& cavity, int n, int m,
                                const Amplitudes& initial, double t);

/// Printed closed forms for the quantized number-state model, evaluated
/// independently of the propagator. Throws std::domain_error when the
/// initial bare state of the triple carries a negative photon number.
ProbabilityTriple quantized_probabilities(Configuration config, const CavityParams& cavity,
                                          int n, int m, Level initial, double t);

}  // namespace trilevel
