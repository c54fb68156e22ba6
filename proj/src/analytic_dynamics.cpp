#include "trilevel/analytic_dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace trilevel {

namespace {

enum class Term { MixK2K1, MixK1K2, Sin4, Sin2K1, Sin2K2, Cos2 };

// (p1, p2, p3) term for every (configuration, initial level).
using Row = std::array<Term, 3>;

constexpr std::array<Row, 3> kLambdaTable{{
    {Term::MixK2K1, Term::Sin4, Term::Sin2K1},  // level 1
    {Term::Sin4, Term::MixK1K2, Term::Sin2K2},  // level 2
    {Term::Sin2K1, Term::Sin2K2, Term::Cos2},   // level 3
}};

constexpr std::array<Row, 3> kVeeTable{{
    {Term::Cos2, Term::Sin2K2, Term::Sin2K1},
    {Term::Sin2K2, Term::MixK1K2, Term::Sin4},
    {Term::Sin2K1, Term::Sin4, Term::MixK2K1},
}};

// Trigonometric factors shared by all terms at one time point.
struct Phase {
  double cos_wt;
  double sin2_wt;       // sin^2(Wt)
  double sin2_half_wt;  // sin^2(Wt/2)
};

Phase phase(double w, double t) {
  const double c = std::cos(w * t);
  const double s = std::sin(w * t);
  const double h = std::sin(0.5 * w * t);
  return {c, s * s, h * h};
}

double evaluate(Term term, double k1, double k2, double w, const Phase& ph) {
  const double w2 = w * w;
  switch (term) {
    case Term::MixK2K1: {
      const double x = (k2 * k2 + k1 * k1 * ph.cos_wt) / w2;
      return x * x;
    }
    case Term::MixK1K2: {
      const double x = (k1 * k1 + k2 * k2 * ph.cos_wt) / w2;
      return x * x;
    }
    case Term::Sin4:
      return 4.0 * k1 * k1 * k2 * k2 / (w2 * w2) * ph.sin2_half_wt * ph.sin2_half_wt;
    case Term::Sin2K1: return k1 * k1 / w2 * ph.sin2_wt;
    case Term::Sin2K2: return k2 * k2 / w2 * ph.sin2_wt;
    case Term::Cos2: return ph.cos_wt * ph.cos_wt;
  }
  return 0.0;
}

const std::array<Row, 3>& table_for(Configuration config) {
  switch (config) {
    case Configuration::Lambda: return kLambdaTable;
    case Configuration::Vee: return kVeeTable;
    case Configuration::Cascade: break;
  }
  throw std::invalid_argument("closed forms exist only for the lambda and vee configurations");
}

ProbabilityTriple frozen(Level initial) {
  ProbabilityTriple p;
  switch (initial) {
    case Level::One: p.p1 = 1.0; break;
    case Level::Two: p.p2 = 1.0; break;
    case Level::Three: p.p3 = 1.0; break;
  }
  return p;
}

void require_lambda_or_vee(Configuration config) {
  if (config == Configuration::Cascade)
    throw std::invalid_argument("the cascade configuration has no dressed-basis solution here");
}

}  // namespace

double ProbabilityTriple::of(Level level) const {
  switch (level) {
    case Level::One: return p1;
    case Level::Two: return p2;
    case Level::Three: return p3;
  }
  return 0.0;
}

ProbabilityTriple probabilities_of(const Amplitudes& a) {
  return {std::norm(a[basis_index(Level::One)]), std::norm(a[basis_index(Level::Two)]),
          std::norm(a[basis_index(Level::Three)])};
}

double EffectiveCouplings::rabi() const { return std::hypot(k1, k2); }

ProbabilityTriple closed_form_probabilities(Configuration config, EffectiveCouplings k,
                                            Level initial, double t) {
  const auto& table = table_for(config);
  const double w = k.rabi();
  if (w == 0.0) return frozen(initial);
  const Row& row = table[static_cast<std::size_t>(level_number(initial) - 1)];
  const Phase ph = phase(w, t);
  return {evaluate(row[0], k.k1, k.k2, w, ph), evaluate(row[1], k.k1, k.k2, w, ph),
          evaluate(row[2], k.k1, k.k2, w, ph)};
}

double rabi_frequency(double kappa1, double kappa2) { return std::hypot(kappa1, kappa2); }

ProbabilityTriple semiclassical_probabilities(Configuration config, double kappa1, double kappa2,
                                              Level initial, double t) {
  if (!(kappa1 >= 0.0) || !(kappa2 >= 0.0))
    throw std::domain_error("drive couplings kappa1, kappa2 must be non-negative");
  return closed_form_probabilities(config, {kappa1, kappa2}, initial, t);
}

EffectiveCouplings quantized_couplings(Configuration config, const CavityParams& cavity, int n,
                                       int m) {
  require_lambda_or_vee(config);
  if (n < 0 || m < 0)
    throw std::domain_error("photon counts must be non-negative, got n=" + std::to_string(n) +
                            ", m=" + std::to_string(m));
  cavity.validate();
  const double dn = n;
  const double dm = m;
  if (config == Configuration::Lambda)
    return {cavity.g1 * std::sqrt(dm + 1.0), cavity.g2 * std::sqrt(dn)};
  return {cavity.g1 * std::sqrt(dm), cavity.g2 * std::sqrt(dn + 1.0)};
}

double manifold_frequency(Configuration config, const CavityParams& cavity, int n, int m) {
  return quantized_couplings(config, cavity, n, m).rabi();
}

RealMatrix3 euler_rotation(double theta1, double theta2, double theta3) {
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  const double c3 = std::cos(theta3), s3 = std::sin(theta3);
  return {{{c3 * c2 - c1 * s2 * s3, c3 * s2 + c1 * c2 * s3, s3 * s1},
           {-s3 * c2 - c1 * s2 * c3, -s3 * s2 + c1 * c2 * c3, c3 * s1},
           {s1 * s2, -s1 * c2, c1}}};
}

DressedBasis dressed_basis(Configuration config, const CavityParams& cavity, int n, int m) {
  const EffectiveCouplings k = quantized_couplings(config, cavity, n, m);
  const double omega = k.rabi();
  if (omega == 0.0)
    throw DegenerateManifoldError("manifold (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                  ") has no coupling; its dynamics is frozen");

  const double r2 = std::numbers::sqrt2;
  DressedBasis basis;
  basis.omega = omega;
  basis.eigenvalues = {omega, 0.0, -omega};

  if (config == Configuration::Lambda) {
    // k2 couples |3>-|2>, k1 couples |3>-|1>.
    const double a = k.k2 / omega;
    const double b = k.k1 / omega;
    basis.rotation = {{{1.0 / r2, a / r2, b / r2}, {0.0, b, -a}, {-1.0 / r2, a / r2, b / r2}}};
    const double big_r = std::sqrt(k.k1 * k.k1 + 2.0 * k.k2 * k.k2);
    basis.euler_angles = {std::acos(k.k1 / (r2 * omega)), -std::acos(-k.k2 / big_r),
                          std::acos(-r2 * k.k2 / big_r)};
  } else {
    // k1 couples |3>-|1>, k2 couples |2>-|1>.
    const double a = k.k2 / omega;
    const double b = k.k1 / omega;
    basis.rotation = {{{b / r2, a / r2, 1.0 / r2}, {-a, b, 0.0}, {-b / r2, -a / r2, 1.0 / r2}}};
    basis.euler_angles = {-std::numbers::pi / 4.0, std::acos(-a), -std::numbers::pi / 2.0};
  }
  return basis;
}

Amplitudes quantized_amplitudes(Configuration config, const CavityParams& cavity, int n, int m,
                                const Amplitudes& initial, double t) {
  const double norm = norm_squared(initial);
  if (!(std::abs(norm - 1.0) <= 1e-12))
    throw std::invalid_argument("initial amplitudes must be normalized, got |c|^2 = " +
                                std::to_string(norm));
  if (manifold_frequency(config, cavity, n, m) == 0.0) return initial;

  const DressedBasis basis = dressed_basis(config, cavity, n, m);
  const RealMatrix3& tm = basis.rotation;
  Amplitudes dressed{};
  for (std::size_t k = 0; k < 3; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < 3; ++j) acc += tm[k][j] * initial[j];
    dressed[k] = acc * std::polar(1.0, -basis.eigenvalues[k] * t);
  }
  Amplitudes out{};
  for (std::size_t j = 0; j < 3; ++j) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < 3; ++k) acc += tm[k][j] * dressed[k];
    out[j] = acc;
  }
  return out;
}

ProbabilityTriple quantized_probabilities(Configuration config, const CavityParams& cavity,
                                          int n, int m, Level initial, double t) {
  const EffectiveCouplings k = quantized_couplings(config, cavity, n, m);
  const BareState start = coupled_triple(config, n, m)[basis_index(initial)];
  if (start.photons1 < 0 || start.photons2 < 0)
    throw std::domain_error("initial bare state of manifold (n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ") has a negative photon number");
  return closed_form_probabilities(config, k, initial, t);
}

}  // namespace trilevel
