#include "trilevel/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace trilevel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Level inverted(Level level) {
  switch (level) {
    case Level::One: return Level::Three;
    case Level::Two: return Level::Two;
    case Level::Three: return Level::One;
  }
  return level;
}

std::string level_tag(Level level) { return "p" + std::to_string(level_number(level)); }

// Running L-infinity distance with the time of its maximum.
struct MaxTracker {
  double value = 0.0;
  double time = 0.0;

  void update(double diff, double t) {
    if (diff > value) {
      value = diff;
      time = t;
    }
  }
};

Amplitudes rk4_step(Configuration config, const AtomParams& atom, const DriveParams& drive,
                    double t, double h, const Amplitudes& c) {
  const auto rhs = [&](double tau, const Amplitudes& y) {
    Amplitudes dy = semiclassical_hamiltonian(config, atom, drive, tau) * y;
    for (auto& x : dy) x *= -kI;
    return dy;
  };
  const auto axpy = [](const Amplitudes& y, double s, const Amplitudes& k) {
    Amplitudes out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = y[i] + s * k[i];
    return out;
  };
  const Amplitudes k1 = rhs(t, c);
  const Amplitudes k2 = rhs(t + 0.5 * h, axpy(c, 0.5 * h, k1));
  const Amplitudes k3 = rhs(t + 0.5 * h, axpy(c, 0.5 * h, k2));
  const Amplitudes k4 = rhs(t + h, axpy(c, h, k3));
  Amplitudes out{};
  for (std::size_t i = 0; i < 3; ++i)
    out[i] = c[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

double norm_one(const ComplexMatrix3& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < 3; ++i) col += std::abs(a(i, j));
    best = std::max(best, col);
  }
  return best;
}

double period_of(double omega) { return omega > 0.0 ? kTwoPi / omega : 1.0; }

}  // namespace

void OracleConfig::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("oracle tolerance must be positive");
  if (!(t_max > 0.0)) throw std::invalid_argument("oracle horizon t_max must be positive");
}

ComparisonReport finalize(ComparisonReport report) {
  report.passed = report.max_abs_error <= report.tolerance;
  return report;
}

double default_rk4_step(Configuration config, const AtomParams& atom, const DriveParams& drive,
                        double t_max) {
  const ComplexMatrix3 h0 = semiclassical_hamiltonian(config, atom, drive, 0.0);
  double fastest = rabi_frequency(drive.kappa1, drive.kappa2);
  fastest = std::max({fastest, std::abs(drive.big_omega1), std::abs(drive.big_omega2)});
  for (std::size_t i = 0; i < 3; ++i) fastest = std::max(fastest, std::abs(h0(i, i)));
  if (fastest == 0.0) return t_max / 2000.0;
  return kTwoPi / fastest / 2000.0;
}

AmplitudeTrace rk4_semiclassical(Configuration config, const AtomParams& atom,
                                 const DriveParams& drive, Level initial,
                                 const OracleConfig& oracle) {
  oracle.validate();
  drive.validate();
  const double requested =
      oracle.step > 0.0 ? oracle.step : default_rk4_step(config, atom, drive, oracle.t_max);
  const auto steps = static_cast<std::size_t>(std::ceil(oracle.t_max / requested - 1e-9));
  const double h = oracle.t_max / static_cast<double>(steps);

  AmplitudeTrace trace;
  trace.times.reserve(steps + 1);
  trace.amplitudes.reserve(steps + 1);
  Amplitudes c = basis_amplitudes(initial);
  trace.times.push_back(0.0);
  trace.amplitudes.push_back(c);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = h * static_cast<double>(k);
    c = rk4_step(config, atom, drive, t, h, c);
    const double drift = std::abs(norm_squared(c) - 1.0);
    trace.max_norm_drift = std::max(trace.max_norm_drift, drift);
    if (drift > kMaxOracleNormDrift)
      throw OracleQualityError("RK4 norm drift " + std::to_string(drift) + " at t=" +
                               std::to_string(t + h) + " exceeds the oracle limit; reduce the step");
    trace.times.push_back(h * static_cast<double>(k + 1));
    trace.amplitudes.push_back(c);
  }
  return trace;
}

DriveParams resonant_drive(Configuration config, const AtomParams& atom, double kappa1,
                           double kappa2) {
  const auto [w1, w2] = field_frequencies(config, atom, 0.0, 0.0);
  return DriveParams{w1, w2, kappa1, kappa2};
}

ComplexMatrix3 matrix_exponential(const ComplexMatrix3& a) {
  // Scale -iA down to norm <= 1/2, sum the Taylor series, square back up.
  const double norm = norm_one(a);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix3 x = (-kI * std::ldexp(1.0, -squarings)) * a;

  ComplexMatrix3 sum = ComplexMatrix3::identity();
  ComplexMatrix3 term = ComplexMatrix3::identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * x * (1.0 / k);
    sum += term;
    if (term.max_abs() < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

ComplexMatrix3 block_exponential(Configuration config, const CavityParams& cavity, int n, int m,
                                 double t) {
  return matrix_exponential(quantized_block(config, cavity, n, m) * t);
}

ComparisonReport compare_semiclassical_oracle(Configuration config, const AtomParams& atom,
                                              double kappa1, double kappa2, Level initial,
                                              const OracleConfig& oracle) {
  const DriveParams drive = resonant_drive(config, atom, kappa1, kappa2);
  const AmplitudeTrace trace = rk4_semiclassical(config, atom, drive, initial, oracle);
  MaxTracker worst;
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    const ProbabilityTriple num = probabilities_of(trace.amplitudes[k]);
    const ProbabilityTriple exact =
        semiclassical_probabilities(config, kappa1, kappa2, initial, trace.times[k]);
    const double diff = std::max({std::abs(num.p1 - exact.p1), std::abs(num.p2 - exact.p2),
                                  std::abs(num.p3 - exact.p3)});
    worst.update(diff, trace.times[k]);
  }
  ComparisonReport report;
  report.max_abs_error = worst.value;
  report.argmax_time = worst.time;
  report.tolerance = oracle.tolerance;
  const std::string tag = std::string(to_string(config)) + " level " +
                          std::to_string(level_number(initial));
  report.series_compared = {"rk4 " + tag, "closed form " + tag};
  return finalize(report);
}

ComparisonReport compare_quantized_oracle(Configuration config, const CavityParams& cavity, int n,
                                          int m, Level initial, double t_max, std::size_t samples,
                                          double tolerance) {
  MaxTracker worst;
  const Amplitudes start = basis_amplitudes(initial);
  for (const double t : uniform_grid(0.0, t_max, samples)) {
    const ProbabilityTriple num = probabilities_of(block_exponential(config, cavity, n, m, t) * start);
    const ProbabilityTriple exact = quantized_probabilities(config, cavity, n, m, initial, t);
    const double diff = std::max({std::abs(num.p1 - exact.p1), std::abs(num.p2 - exact.p2),
                                  std::abs(num.p3 - exact.p3)});
    worst.update(diff, t);
  }
  ComparisonReport report;
  report.max_abs_error = worst.value;
  report.argmax_time = worst.time;
  report.tolerance = tolerance;
  const std::string tag = std::string(to_string(config)) + " n=" + std::to_string(n) +
                          " m=" + std::to_string(m) + " level " +
                          std::to_string(level_number(initial));
  report.series_compared = {"block exponential " + tag, "closed form " + tag};
  return finalize(report);
}

void require_inversion_pair(Level lambda_level, Level vee_level) {
  if (inverted(lambda_level) != vee_level)
    throw std::invalid_argument("lambda level " + std::to_string(level_number(lambda_level)) +
                                " pairs with vee level " +
                                std::to_string(level_number(inverted(lambda_level))) + ", not " +
                                std::to_string(level_number(vee_level)));
}

SymmetryParams default_symmetry_params(SymmetryKind kind) {
  SymmetryParams p;
  p.kind = kind;
  p.tolerance = kind == SymmetryKind::Coherent ? 0.05 : 1e-12;
  return p;
}

ComparisonReport symmetry_report(const SymmetryParams& params) {
  require_inversion_pair(params.lambda_level, params.vee_level);
  if (params.levels.empty()) throw std::invalid_argument("no levels selected for comparison");

  ComparisonReport report;
  report.tolerance = params.tolerance;
  for (const Level level : params.levels)
    report.series_compared.push_back("lambda " + level_tag(level) + " vs vee " +
                                     level_tag(inverted(level)));

  MaxTracker worst;
  const auto accumulate = [&](double t, const ProbabilityTriple& lam, const ProbabilityTriple& vee) {
    for (const Level level : params.levels)
      worst.update(std::abs(lam.of(level) - vee.of(inverted(level))), t);
  };

  switch (params.kind) {
    case SymmetryKind::Semiclassical: {
      const double period = period_of(rabi_frequency(params.kappa1, params.kappa2));
      for (const double t : uniform_grid(0.0, period, params.period_samples))
        accumulate(t,
                   semiclassical_probabilities(Configuration::Lambda, params.kappa1, params.kappa2,
                                               params.lambda_level, t),
                   semiclassical_probabilities(Configuration::Vee, params.kappa1, params.kappa2,
                                               params.vee_level, t));
      break;
    }
    case SymmetryKind::QuantizedNumberState: {
      const double period = std::max(
          period_of(manifold_frequency(Configuration::Lambda, params.cavity, params.n, params.m)),
          period_of(manifold_frequency(Configuration::Vee, params.cavity, params.n, params.m)));
      for (const double t : uniform_grid(0.0, period, params.period_samples))
        accumulate(t,
                   quantized_probabilities(Configuration::Lambda, params.cavity, params.n,
                                           params.m, params.lambda_level, t),
                   quantized_probabilities(Configuration::Vee, params.cavity, params.n, params.m,
                                           params.vee_level, t));
      break;
    }
    case SymmetryKind::Coherent: {
      const AveragedTrace lam = averaged_probabilities(
          Configuration::Lambda, params.cavity, params.lambda_field, params.lambda_level,
          params.times);
      const AveragedTrace vee = averaged_probabilities(Configuration::Vee, params.cavity,
                                                       params.vee_field, params.vee_level,
                                                       params.times);
      for (std::size_t k = 0; k < params.times.size(); ++k)
        accumulate(params.times[k], {lam.p1[k], lam.p2[k], lam.p3[k]},
                   {vee.p1[k], vee.p2[k], vee.p3[k]});
      break;
    }
  }
  report.max_abs_error = worst.value;
  report.argmax_time = worst.time;
  return finalize(report);
}

bool symmetry_broken(const ComparisonReport& report) {
  return report.max_abs_error > 10.0 * report.tolerance && report.max_abs_error > 0.01;
}

EffectiveCouplings matched_couplings(Configuration config, const CavityParams& cavity, int n,
                                     int m) {
  return quantized_couplings(config, cavity, n, m);
}

ComparisonReport bohr_correspondence(Configuration config, const CavityParams& cavity, int n,
                                     int m, Level initial, std::size_t samples, double tolerance) {
  const EffectiveCouplings kappa = matched_couplings(config, cavity, n, m);
  const double span = 2.0 * period_of(kappa.rabi());
  const Amplitudes start = basis_amplitudes(initial);
  MaxTracker worst;
  for (const double t : uniform_grid(0.0, span, samples)) {
    const ProbabilityTriple q =
        probabilities_of(quantized_amplitudes(config, cavity, n, m, start, t));
    const ProbabilityTriple s = semiclassical_probabilities(config, kappa.k1, kappa.k2, initial, t);
    worst.update(std::max({std::abs(q.p1 - s.p1), std::abs(q.p2 - s.p2), std::abs(q.p3 - s.p3)}),
                 t);
  }
  ComparisonReport report;
  report.max_abs_error = worst.value;
  report.argmax_time = worst.time;
  report.tolerance = tolerance;
  const std::string tag = std::string(to_string(config)) + " level " +
                          std::to_string(level_number(initial));
  report.series_compared = {"quantized n=" + std::to_string(n) + " m=" + std::to_string(m) + " " +
                                tag,
                            "semiclassical matched " + tag};
  return finalize(report);
}

}  // namespace trilevel
