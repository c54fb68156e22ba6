#include "trilevel/model_builder.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trilevel/su3_algebra.hpp"

namespace trilevel {

namespace {

struct Generator {
  ComplexMatrix3 plus;
  ComplexMatrix3 minus;
  ComplexMatrix3 diag;
};

/// Generators attached to field mode 1 and mode 2.
struct GeneratorPair {
  Generator first;
  Generator second;
};

GeneratorPair generators(Configuration config) {
  static const ShiftOperators s = shift_operators();
  const Generator t{s.t_plus, s.t_minus, s.t3};
  const Generator u{s.u_plus, s.u_minus, s.u3};
  const Generator v{s.v_plus, s.v_minus, s.v3};
  switch (config) {
    case Configuration::Lambda: return {v, t};
    case Configuration::Vee: return {v, u};
    case Configuration::Cascade: return {u, t};
  }
  throw std::invalid_argument("unknown configuration");
}

// Detuning D_i = a_i w1 + b_i w2 - W_i, stored per configuration.
struct DetuningCoefficients {
  double a1, b1, a2, b2;
};

DetuningCoefficients detuning_coefficients(Configuration config) {
  switch (config) {
    case Configuration::Lambda: return {2.0, 1.0, 1.0, 2.0};
    case Configuration::Vee: return {2.0, 1.0, 1.0, 2.0};
    case Configuration::Cascade: return {2.0, -1.0, -1.0, 2.0};
  }
  throw std::invalid_argument("unknown configuration");
}

// Prefactors of the two diagonal generators in the unperturbed part H_I.
std::array<double, 2> free_prefactors(Configuration config, const AtomParams& atom, double big1,
                                      double big2) {
  const double w1 = atom.omega1;
  const double w2 = atom.omega2;
  if (config == Configuration::Cascade) return {big1 + w2 - w1, big2 + w1 - w2};
  return {big1 - w1 - w2, big2 - w1 - w2};
}

ComplexMatrix3 interaction(const GeneratorPair& g, double c1, double c2, double big1,
                           double big2, double t) {
  const Complex e1 = std::polar(1.0, -big1 * t);
  const Complex e2 = std::polar(1.0, -big2 * t);
  return c1 * (g.first.plus * e1 + g.first.minus * std::conj(e1)) +
         c2 * (g.second.plus * e2 + g.second.minus * std::conj(e2));
}

void require_photons(int n, int m) {
  if (n < 0 || m < 0)
    throw std::domain_error("photon counts must be non-negative, got n=" + std::to_string(n) +
                            ", m=" + std::to_string(m));
}

double sqrt_count(int k) { return k > 0 ? std::sqrt(static_cast<double>(k)) : 0.0; }

// <row| X+ a + X- a^+ |col> for one mode. `mode` selects which photon count
// the ladder acts on; the other count must match.
double mode_element(const Generator& gen, int mode, const BareState& row, const BareState& col) {
  const int r_this = mode == 1 ? row.photons1 : row.photons2;
  const int c_this = mode == 1 ? col.photons1 : col.photons2;
  const int r_other = mode == 1 ? row.photons2 : row.photons1;
  const int c_other = mode == 1 ? col.photons2 : col.photons1;
  if (r_other != c_other) return 0.0;
  const std::size_t i = basis_index(row.level);
  const std::size_t j = basis_index(col.level);
  if (r_this == c_this - 1) return gen.plus(i, j).real() * sqrt_count(c_this);
  if (r_this == c_this + 1) return gen.minus(i, j).real() * sqrt_count(c_this + 1);
  return 0.0;
}

ComplexMatrix3 coupling_block(const GeneratorPair& g, double g1, double g2,
                              const std::array<BareState, 3>& triple) {
  ComplexMatrix3 h;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      h(i, j) = g1 * mode_element(g.first, 1, triple[i], triple[j]) +
                g2 * mode_element(g.second, 2, triple[i], triple[j]);
  return h;
}

}  // namespace

std::string_view to_string(Configuration c) {
  switch (c) {
    case Configuration::Lambda: return "lambda";
    case Configuration::Vee: return "vee";
    case Configuration::Cascade: return "cascade";
  }
  return "unknown";
}

Configuration parse_configuration(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "lambda") return Configuration::Lambda;
  if (lower == "vee" || lower == "v") return Configuration::Vee;
  if (lower == "cascade" || lower == "xi") return Configuration::Cascade;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (expected lambda, vee or cascade)");
}

void DriveParams::validate() const {
  if (!(kappa1 >= 0.0) || !(kappa2 >= 0.0))
    throw std::domain_error("drive couplings kappa1, kappa2 must be non-negative");
}

void CavityParams::validate() const {
  if (!(g1 >= 0.0) || !(g2 >= 0.0))
    throw std::domain_error("cavity couplings g1, g2 must be non-negative");
}

DetuningSet detunings(Configuration config, const AtomParams& atom, double big_omega1,
                      double big_omega2) {
  const auto c = detuning_coefficients(config);
  return {c.a1 * atom.omega1 + c.b1 * atom.omega2 - big_omega1,
          c.a2 * atom.omega1 + c.b2 * atom.omega2 - big_omega2, config};
}

std::array<double, 2> field_frequencies(Configuration config, const AtomParams& atom,
                                        double delta1, double delta2) {
  const auto c = detuning_coefficients(config);
  return {c.a1 * atom.omega1 + c.b1 * atom.omega2 - delta1,
          c.a2 * atom.omega1 + c.b2 * atom.omega2 - delta2};
}

bool on_resonance_manifold(const DetuningSet& d, double tol) {
  if (d.configuration == Configuration::Cascade) return std::abs(d.delta1 - d.delta2) <= tol;
  return std::abs(d.delta1 + d.delta2) <= tol;
}

ComplexMatrix3 semiclassical_hamiltonian(Configuration config, const AtomParams& atom,
                                         const DriveParams& drive, double t) {
  drive.validate();
  const GeneratorPair g = generators(config);
  const auto free = free_prefactors(config, atom, drive.big_omega1, drive.big_omega2);
  const DetuningSet d = detunings(config, atom, drive.big_omega1, drive.big_omega2);
  const ComplexMatrix3 h_free = free[0] * g.first.diag + free[1] * g.second.diag;
  const ComplexMatrix3 h_int =
      d.delta1 * g.first.diag + d.delta2 * g.second.diag +
      interaction(g, drive.kappa1, drive.kappa2, drive.big_omega1, drive.big_omega2, t);
  return h_free + h_int;
}

std::array<BareState, 3> coupled_triple(Configuration config, int n, int m) {
  switch (config) {
    case Configuration::Lambda:
      return {BareState{Level::Three, m, n - 1}, BareState{Level::Two, m, n},
              BareState{Level::One, m + 1, n - 1}};
    case Configuration::Vee:
      return {BareState{Level::Three, m - 1, n + 1}, BareState{Level::Two, m, n},
              BareState{Level::One, m, n + 1}};
    case Configuration::Cascade:
      return {BareState{Level::Three, n - 1, m - 1}, BareState{Level::Two, n - 1, m},
              BareState{Level::One, n, m}};
  }
  throw std::invalid_argument("unknown configuration");
}

ComplexMatrix3 quantized_block(Configuration config, const CavityParams& cavity, int n, int m) {
  require_photons(n, m);
  cavity.validate();
  return coupling_block(generators(config), cavity.g1, cavity.g2, coupled_triple(config, n, m));
}

double commutation_check(Configuration config, const AtomParams& atom,
                         const CavityParams& cavity, const DetuningSet& d, int n, int m) {
  require_photons(n, m);
  cavity.validate();
  if (d.configuration != config)
    throw std::invalid_argument("detuning set belongs to a different configuration");

  const GeneratorPair g = generators(config);
  const auto triple = coupled_triple(config, n, m);
  const auto [big1, big2] = field_frequencies(config, atom, d.delta1, d.delta2);
  const auto free = free_prefactors(config, atom, big1, big2);

  ComplexMatrix3 h_free;
  ComplexMatrix3 h_int = coupling_block(g, cavity.g1, cavity.g2, triple);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t k = basis_index(triple[i].level);
    const double x3 = g.first.diag(k, k).real();
    const double y3 = g.second.diag(k, k).real();
    h_free(i, i) = free[0] * x3 + free[1] * y3 + big1 * triple[i].photons1 +
                   big2 * triple[i].photons2;
    h_int(i, i) = d.delta1 * x3 + d.delta2 * y3;
  }
  return commutator(h_free, h_int).max_abs();
}

}  // namespace trilevel
