#pragma once

// Numerical oracles that do not share code with the closed forms: a fixed
// step RK4 integrator for the driven atom and a Taylor scaling-and-squaring
// exponential of the quantized manifold block. Also the lambda/vee symmetry
// comparisons and the semiclassical correspondence check built on them.

#include <stdexcept>
#include <string>
#include <vector>

#include "trilevel/analytic_dynamics.hpp"
#include "trilevel/coherent_field.hpp"
#include "trilevel/matrix3.hpp"
#include "trilevel/model_builder.hpp"

namespace trilevel {

struct OracleConfig {
  double step = 0.0;  // <= 0: default_rk4_step()
  double tolerance = 1e-6;
  double t_max = 100.0;

  void validate() const;  // tolerance > 0, t_max > 0
};

struct ComparisonReport {
  double max_abs_error = 0.0;
  double argmax_time = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> series_compared;
  bool passed = false;
};

/// passed <=> max_abs_error <= tolerance. Fills `passed` from the other fields.
ComparisonReport finalize(ComparisonReport report);

/// Raised when an oracle run is not accurate enough to be trusted.
class OracleQualityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// RK4 norm drift beyond which an integration is rejected.
inline constexpr double kMaxOracleNormDrift = 1e-6;

struct AmplitudeTrace {
  std::vector<double> times;
  std::vector<Amplitudes> amplitudes;
  double max_norm_drift = 0.0;
};

/// Shortest period among the Rabi frequency, the level energies and the
/// drive frequencies, divided by 2000.
double default_rk4_step(Configuration config, const AtomParams& atom, const DriveParams& drive,
                        double t_max);

/// Integrates i dC/dt = H(t) C with the lab-frame Hamiltonian from
/// semiclassical_hamiltonian(), starting in `initial`. The step is shrunk
/// so that it divides t_max exactly; every step is recorded. Throws
/// OracleQualityError when the norm drifts by more than kMaxOracleNormDrift.
AmplitudeTrace rk4_semiclassical(Configuration config, const AtomParams& atom,
                                 const DriveParams& drive, Level initial,
                                 const OracleConfig& oracle);

/// Resonant drive: both field frequencies at zero detuning.
DriveParams resonant_drive(Configuration config, const AtomParams& atom, double kappa1,
                           double kappa2);

/// exp(-i A) for a 3x3 matrix A via Taylor series with scaling and squaring.
ComplexMatrix3 matrix_exponential(const ComplexMatrix3& a);

/// exp(-i H t) for the quantized block of manifold (n, m).
ComplexMatrix3 block_exponential(Configuration config, const CavityParams& cavity, int n, int m,
                                 double t);

/// RK4 populations against the resonant closed forms on every oracle step.
ComparisonReport compare_semiclassical_oracle(Configuration config, const AtomParams& atom,
                                              double kappa1, double kappa2, Level initial,
                                              const OracleConfig& oracle);

/// Block exponential populations against quantized_probabilities() on
/// `samples` points of [0, t_max].
ComparisonReport compare_quantized_oracle(Configuration config, const CavityParams& cavity, int n,
                                          int m, Level initial, double t_max, std::size_t samples,
                                          double tolerance = 1e-10);

enum class SymmetryKind { Semiclassical, QuantizedNumberState, Coherent };

/// Lambda/vee case pairs under the inversion 1 <-> 3: level 1 <-> 3,
/// level 2 <-> 2. Throws std::invalid_argument for any other pairing.
void require_inversion_pair(Level lambda_level, Level vee_level);

struct SymmetryParams {
  SymmetryKind kind = SymmetryKind::Semiclassical;
  Level lambda_level = Level::One;
  Level vee_level = Level::Three;
  /// Lambda-side levels to compare; each is matched with its inverted
  /// counterpart on the vee side.
  std::vector<Level> levels{Level::One, Level::Two, Level::Three};

  double kappa1 = 0.0;  // semiclassical
  double kappa2 = 0.0;

  CavityParams cavity;  // quantized and coherent
  int n = 0;
  int m = 0;

  CoherentSpec lambda_field;  // coherent
  CoherentSpec vee_field;
  std::vector<double> times;

  double tolerance = 1e-12;
  std::size_t period_samples = 4001;
};

/// Default tolerances: 1e-12 for the exact kinds, 0.05 for coherent traces.
SymmetryParams default_symmetry_params(SymmetryKind kind);

/// L-infinity distance between the lambda trace and the level-inverted vee
/// trace. The exact kinds use a dense grid over the longer of the two
/// periods, the coherent kind the full `times` grid.
ComparisonReport symmetry_report(const SymmetryParams& params);

/// Distance that counts as a genuinely broken symmetry: above 10x the
/// comparison tolerance and above 0.01.
bool symmetry_broken(const ComparisonReport& report);

/// Semiclassical couplings reproducing manifold (n, m):
///   Lambda kappa1 = g1 sqrt(m+1), kappa2 = g2 sqrt(n)
///   Vee    kappa1 = g1 sqrt(m),   kappa2 = g2 sqrt(n+1)
EffectiveCouplings matched_couplings(Configuration config, const CavityParams& cavity, int n,
                                     int m);

/// Quantized propagator populations for `initial` against the semiclassical
/// closed forms at matched couplings, over two periods.
ComparisonReport bohr_correspondence(Configuration config, const CavityParams& cavity, int n,
                                     int m, Level initial, std::size_t samples = 2001,
                                     double tolerance = 1e-12);

}  // namespace trilevel
