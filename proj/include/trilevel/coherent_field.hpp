#pragma once

// Populations of a lambda or vee atom interacting with two coherent modes:
// number-state probabilities averaged over Poisson photon statistics,
// together with envelope diagnostics for collapse and revival.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "trilevel/analytic_dynamics.hpp"
#include "trilevel/model_builder.hpp"

namespace trilevel {

/// Poisson tail mass tolerated beyond a cutoff.
inline constexpr double kPoissonTailTolerance = 1e-12;

/// W_k = exp(-nbar) nbar^k / k! for k = 0..cutoff, evaluated in log space.
/// Throws std::domain_error for nbar < 0 or cutoff < 0.
std::vector<double> poisson_weights(double nbar, int cutoff);

/// max(20, ceil(nbar + 10 sqrt(nbar))), extended until the Poisson tail
/// beyond it drops below kPoissonTailTolerance.
int default_cutoff(double nbar);

/// Which photon numbers the Poisson weights are attached to.
enum class WeightIndexing {
  /// Weights W_n W_m on the manifold labels (n, m).
  ManifoldLabel,
  /// Weights on the photon numbers of the initially occupied bare state,
  /// i.e. on the field actually prepared alongside the atom.
  InitialOccupation,
};

/// Mean photon numbers of the two modes: nbar belongs to the mode whose
/// manifold label is n (coupling g2), mbar to the label m (coupling g1).
struct CoherentSpec {
  double nbar = 0.0;
  double mbar = 0.0;
  int cutoff_n = -1;  // negative: default_cutoff(nbar)
  int cutoff_m = -1;  // negative: default_cutoff(mbar)
  WeightIndexing indexing = WeightIndexing::ManifoldLabel;

  /// Copy with negative cutoffs replaced by the default rule. Throws
  /// std::domain_error for negative means.
  CoherentSpec resolved() const;
};

struct AveragedTrace {
  Configuration configuration = Configuration::Lambda;
  Level initial = Level::One;
  CavityParams cavity;
  CoherentSpec spec;  // resolved cutoffs

  std::vector<double> times;
  std::vector<double> p1, p2, p3;

  /// Product of the truncated weight sums of both modes.
  double weight_mass = 0.0;
  /// Poisson-weighted mean of the manifold frequencies.
  double mean_rabi = 0.0;

  const std::vector<double>& series(Level level) const;
};

/// Coupling pair attached to the weight indices (i, j) of the two modes.
EffectiveCouplings weighted_couplings(Configuration config, const CavityParams& cavity, int i,
                                      int j, Level initial, WeightIndexing indexing);

/// sum_{i,j} W_i W_j P_k^{(i,j)}(t) for each k and every t in `times`.
///
/// Summation is ascending in i, then j, with compensated accumulation, so
/// repeated runs are bit-identical. Throws std::invalid_argument for an
/// empty or non-increasing time grid.
AveragedTrace averaged_probabilities(Configuration config, const CavityParams& cavity,
                                     const CoherentSpec& spec, Level initial,
                                     const std::vector<double>& times);

/// Poisson-weighted mean of Omega over the truncated manifold set.
double mean_rabi_frequency(Configuration config, const CavityParams& cavity,
                           const CoherentSpec& spec, Level initial);

/// Largest manifold frequency inside the truncated sum.
double max_rabi_frequency(Configuration config, const CavityParams& cavity,
                          const CoherentSpec& spec, Level initial);

/// 2 pi <Omega> / g^2 for the weaker coupled mode with nonzero mean: the
/// time at which neighbouring manifolds of that mode rephase. Returns 0 when
/// no mode is populated or coupled.
double revival_time_estimate(Configuration config, const CavityParams& cavity,
                             const CoherentSpec& spec, Level initial);

/// Samples needed for at least 40 points per shortest Rabi period up to
/// t_max, never fewer than 2000.
std::size_t recommended_samples(double t_max, double max_rabi);

/// `samples` equally spaced points on [t0, t1], endpoints included.
/// Throws std::invalid_argument for samples < 2 or t1 <= t0.
std::vector<double> uniform_grid(double t0, double t1, std::size_t samples);

class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oscillation amplitudes measured on sliding windows.
///
/// Each window is linearly detrended and its amplitude is max - min of the
/// residual. Windows advance by a quarter width. The collapse window is the
/// quietest window in the first half of the trace after the initial one;
/// the revival window is the loudest one after the collapse.
struct EnvelopeMetrics {
  double window_width = 0.0;
  double initial_amplitude = 0.0;
  double collapse_amplitude = 0.0;
  double collapse_time = 0.0;  // window centre
  double revival_amplitude = 0.0;
  double revival_time = 0.0;  // window centre

  /// collapse < 0.2 x initial.
  bool collapsed() const;
  /// revival > 2 x collapse, on top of a collapse.
  bool revived() const;
};

/// Throws DiagnosticError when fewer than four windows fit in the series or
/// a window holds fewer than eight samples; std::invalid_argument when the
/// inputs are inconsistent.
EnvelopeMetrics envelope_metrics(const std::vector<double>& times,
                                 const std::vector<double>& values, double window_width);

/// Windows of width 4 pi / mean_rabi on the chosen level. Additionally
/// throws DiagnosticError when the trace ends before the revival estimate.
EnvelopeMetrics envelope_metrics(const AveragedTrace& trace, Level level);

}  // namespace trilevel
