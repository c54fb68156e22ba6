#include "trilevel/coherent_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace trilevel {

namespace {

void require_mean(double nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar))
    throw std::domain_error("mean photon number must be finite and non-negative, got " +
                            std::to_string(nbar));
}

double log_poisson(double nbar, int k) {
  return -nbar + k * std::log(nbar) - std::lgamma(k + 1.0);
}

// Poisson mass strictly above `cutoff`, summed term by term.
double poisson_tail(double nbar, int cutoff) {
  if (nbar == 0.0) return 0.0;
  double tail = 0.0;
  for (int k = cutoff + 1;; ++k) {
    const double w = std::exp(log_poisson(nbar, k));
    tail += w;
    if (k > nbar && w <= tail * 1e-17) break;
  }
  return tail;
}

// Compensated (Neumaier) accumulator.
struct Accumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

template <typename Fn>
void for_each_manifold(const CoherentSpec& spec, Fn&& fn) {
  const std::vector<double> wn = poisson_weights(spec.nbar, spec.cutoff_n);
  const std::vector<double> wm = poisson_weights(spec.mbar, spec.cutoff_m);
  for (int i = 0; i <= spec.cutoff_n; ++i) {
    for (int j = 0; j <= spec.cutoff_m; ++j) {
      const double w = wn[static_cast<std::size_t>(i)] * wm[static_cast<std::size_t>(j)];
      if (w == 0.0) continue;
      fn(i, j, w);
    }
  }
}

void require_grid(const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("time grid must not be empty");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1]))
      throw std::invalid_argument("time grid must be strictly increasing");
}

double detrended_amplitude(const std::vector<double>& times, const std::vector<double>& values,
                           std::size_t begin, std::size_t end) {
  const double count = static_cast<double>(end - begin);
  double mt = 0.0, mv = 0.0;
  for (std::size_t k = begin; k < end; ++k) {
    mt += times[k];
    mv += values[k];
  }
  mt /= count;
  mv /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = begin; k < end; ++k) {
    sxy += (times[k] - mt) * (values[k] - mv);
    sxx += (times[k] - mt) * (times[k] - mt);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t k = begin; k < end; ++k) {
    const double r = values[k] - mv - slope * (times[k] - mt);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return hi - lo;
}

}  // namespace

std::vector<double> poisson_weights(double nbar, int cutoff) {
  require_mean(nbar);
  if (cutoff < 0)
    throw std::domain_error("cutoff must be non-negative, got " + std::to_string(cutoff));
  std::vector<double> w(static_cast<std::size_t>(cutoff) + 1, 0.0);
  if (nbar == 0.0) {
    w[0] = 1.0;
    return w;
  }
  for (int k = 0; k <= cutoff; ++k) w[static_cast<std::size_t>(k)] = std::exp(log_poisson(nbar, k));
  return w;
}

int default_cutoff(double nbar) {
  require_mean(nbar);
  int cutoff = std::max(20, static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar))));
  while (poisson_tail(nbar, cutoff) >= kPoissonTailTolerance) ++cutoff;
  return cutoff;
}

CoherentSpec CoherentSpec::resolved() const {
  require_mean(nbar);
  require_mean(mbar);
  CoherentSpec out = *this;
  if (out.cutoff_n < 0) out.cutoff_n = default_cutoff(nbar);
  if (out.cutoff_m < 0) out.cutoff_m = default_cutoff(mbar);
  return out;
}

const std::vector<double>& AveragedTrace::series(Level level) const {
  switch (level) {
    case Level::One: return p1;
    case Level::Two: return p2;
    case Level::Three: return p3;
  }
  return p1;
}

EffectiveCouplings weighted_couplings(Configuration config, const CavityParams& cavity, int i,
                                      int j, Level initial, WeightIndexing indexing) {
  if (indexing == WeightIndexing::ManifoldLabel) return quantized_couplings(config, cavity, i, j);
  if (config == Configuration::Cascade)
    throw std::invalid_argument("coherent averaging is defined for lambda and vee only");
  if (i < 0 || j < 0) throw std::domain_error("photon numbers must be non-negative");
  cavity.validate();

  // The initial bare state of manifold (n, m) holds photons1 = m + off1 and
  // photons2 = n + off2; invert that to recover the manifold labels.
  const BareState offset = coupled_triple(config, 0, 0)[basis_index(initial)];
  const double n = static_cast<double>(i - offset.photons2);
  const double m = static_cast<double>(j - offset.photons1);
  if (config == Configuration::Lambda)
    return {cavity.g1 * std::sqrt(std::max(0.0, m + 1.0)), cavity.g2 * std::sqrt(std::max(0.0, n))};
  return {cavity.g1 * std::sqrt(std::max(0.0, m)), cavity.g2 * std::sqrt(std::max(0.0, n + 1.0))};
}

AveragedTrace averaged_probabilities(Configuration config, const CavityParams& cavity,
                                     const CoherentSpec& spec, Level initial,
                                     const std::vector<double>& times) {
  require_grid(times);
  cavity.validate();
  const CoherentSpec resolved = spec.resolved();

  const std::size_t count = times.size();
  std::vector<Accumulator> a1(count), a2(count), a3(count);
  Accumulator mass, rabi;

  for_each_manifold(resolved, [&](int i, int j, double w) {
    const EffectiveCouplings k = weighted_couplings(config, cavity, i, j, initial, resolved.indexing);
    mass.add(w);
    rabi.add(w * k.rabi());
    for (std::size_t s = 0; s < count; ++s) {
      const ProbabilityTriple p = closed_form_probabilities(config, k, initial, times[s]);
      a1[s].add(w * p.p1);
      a2[s].add(w * p.p2);
      a3[s].add(w * p.p3);
    }
  });

  AveragedTrace trace;
  trace.configuration = config;
  trace.initial = initial;
  trace.cavity = cavity;
  trace.spec = resolved;
  trace.times = times;
  trace.p1.resize(count);
  trace.p2.resize(count);
  trace.p3.resize(count);
  for (std::size_t s = 0; s < count; ++s) {
    trace.p1[s] = a1[s].value();
    trace.p2[s] = a2[s].value();
    trace.p3[s] = a3[s].value();
  }
  trace.weight_mass = mass.value();
  trace.mean_rabi = trace.weight_mass > 0.0 ? rabi.value() / trace.weight_mass : 0.0;
  return trace;
}

double mean_rabi_frequency(Configuration config, const CavityParams& cavity,
                           const CoherentSpec& spec, Level initial) {
  const CoherentSpec resolved = spec.resolved();
  Accumulator mass, rabi;
  for_each_manifold(resolved, [&](int i, int j, double w) {
    mass.add(w);
    rabi.add(w * weighted_couplings(config, cavity, i, j, initial, resolved.indexing).rabi());
  });
  return mass.value() > 0.0 ? rabi.value() / mass.value() : 0.0;
}

double max_rabi_frequency(Configuration config, const CavityParams& cavity,
                          const CoherentSpec& spec, Level initial) {
  const CoherentSpec resolved = spec.resolved();
  double best = 0.0;
  for_each_manifold(resolved, [&](int i, int j, double) {
    best = std::max(best,
                    weighted_couplings(config, cavity, i, j, initial, resolved.indexing).rabi());
  });
  return best;
}

double revival_time_estimate(Configuration config, const CavityParams& cavity,
                             const CoherentSpec& spec, Level initial) {
  double g_sq = std::numeric_limits<double>::infinity();
  if (spec.nbar > 0.0 && cavity.g2 > 0.0) g_sq = std::min(g_sq, cavity.g2 * cavity.g2);
  if (spec.mbar > 0.0 && cavity.g1 > 0.0) g_sq = std::min(g_sq, cavity.g1 * cavity.g1);
  if (!std::isfinite(g_sq)) return 0.0;
  return 2.0 * std::numbers::pi * mean_rabi_frequency(config, cavity, spec, initial) / g_sq;
}

std::size_t recommended_samples(double t_max, double max_rabi) {
  constexpr std::size_t kFloor = 2000;
  if (!(t_max > 0.0) || !(max_rabi > 0.0)) return kFloor;
  const double period = 2.0 * std::numbers::pi / max_rabi;
  return std::max(kFloor, static_cast<std::size_t>(std::ceil(40.0 * t_max / period)) + 1);
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("a time grid needs at least two samples");
  if (!(t1 > t0)) throw std::invalid_argument("time grid end must exceed its start");
  std::vector<double> grid(samples);
  const double step = (t1 - t0) / static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) grid[k] = t0 + step * static_cast<double>(k);
  grid.back() = t1;
  return grid;
}

bool EnvelopeMetrics::collapsed() const { return collapse_amplitude < 0.2 * initial_amplitude; }

bool EnvelopeMetrics::revived() const {
  return collapsed() && revival_amplitude > 2.0 * collapse_amplitude;
}

EnvelopeMetrics envelope_metrics(const std::vector<double>& times,
                                 const std::vector<double>& values, double window_width) {
  if (times.size() != values.size())
    throw std::invalid_argument("times and values differ in length");
  if (!(window_width > 0.0)) throw std::invalid_argument("window width must be positive");
  require_grid(times);

  const double t0 = times.front();
  const double span = times.back() - t0;
  const double stride = window_width / 4.0;

  struct Window {
    double centre;
    double amplitude;
  };
  std::vector<Window> windows;
  for (std::size_t k = 0;; ++k) {
    const double start = t0 + stride * static_cast<double>(k);
    const double stop = start + window_width;
    if (stop > times.back() + 1e-12 * std::max(1.0, std::abs(times.back()))) break;
    const auto b = static_cast<std::size_t>(
        std::lower_bound(times.begin(), times.end(), start) - times.begin());
    const auto e = static_cast<std::size_t>(
        std::upper_bound(times.begin(), times.end(), stop) - times.begin());
    if (e - b < 8)
      throw DiagnosticError("envelope window holds " + std::to_string(e - b) +
                            " samples; at least 8 are needed");
    windows.push_back({start + 0.5 * window_width, detrended_amplitude(times, values, b, e)});
  }
  if (windows.size() < 4)
    throw DiagnosticError("trace of length " + std::to_string(span) + " fits only " +
                          std::to_string(windows.size()) + " envelope windows; at least 4 needed");

  EnvelopeMetrics out;
  out.window_width = window_width;
  out.initial_amplitude = windows[0].amplitude;

  std::size_t collapse = 1;
  for (std::size_t k = 1; k < windows.size(); ++k) {
    if (windows[k].centre - t0 > 0.5 * span) break;
    if (windows[k].amplitude < windows[collapse].amplitude) collapse = k;
  }
  out.collapse_amplitude = windows[collapse].amplitude;
  out.collapse_time = windows[collapse].centre;
  out.revival_time = out.collapse_time;
  for (std::size_t k = collapse + 1; k < windows.size(); ++k) {
    if (windows[k].amplitude > out.revival_amplitude) {
      out.revival_amplitude = windows[k].amplitude;
      out.revival_time = windows[k].centre;
    }
  }
  return out;
}

EnvelopeMetrics envelope_metrics(const AveragedTrace& trace, Level level) {
  if (!(trace.mean_rabi > 0.0))
    throw DiagnosticError("trace has no oscillation (mean Rabi frequency is zero)");
  const double revival =
      revival_time_estimate(trace.configuration, trace.cavity, trace.spec, trace.initial);
  if (revival > 0.0 && !trace.times.empty() && trace.times.back() < revival)
    throw DiagnosticError("trace ends at t=" + std::to_string(trace.times.back()) +
                          " before the expected revival near t=" + std::to_string(revival));
  return envelope_metrics(trace.times, trace.series(level),
                          4.0 * std::numbers::pi / trace.mean_rabi);
}

}  // namespace trilevel
