#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trilevel/analytic_dynamics.hpp"
#include "trilevel/su3_algebra.hpp"
#include "trilevel/verification.hpp"

namespace trilevel::cli {

namespace {

constexpr std::array<Level, 3> kLevels{Level::One, Level::Two, Level::Three};
constexpr std::array<Configuration, 2> kSolvable{Configuration::Lambda, Configuration::Vee};

// Reference parameters: drive couplings 0.2/0.1, cavity couplings 0.2/0.1
// with one photon per mode.
const AtomParams kAtom{1.0, 0.6};
constexpr double kKappa1 = 0.2;
constexpr double kKappa2 = 0.1;
const CavityParams kCavity{0.0, 0.0, 0.2, 0.1};

std::string tag(Configuration c, Level l) {
  return std::string(to_string(c)) + " level " + std::to_string(level_number(l));
}

CheckResult from_report(const std::string& suite, const std::string& name,
                        const ComparisonReport& r) {
  return {suite, name, r.max_abs_error, r.tolerance, r.passed, {}};
}

void algebra(std::vector<CheckResult>& out) {
  for (const auto& rel : verify_closed_algebra().relations)
    out.push_back({"algebra", rel.name, rel.max_deviation, kAlgebraTolerance,
                   rel.max_deviation <= kAlgebraTolerance, {}});
}

void oracle(std::vector<CheckResult>& out) {
  for (const auto config : kSolvable)
    for (const auto level : kLevels)
      out.push_back(from_report(
          "oracle", "rk4 vs closed form, " + tag(config, level),
          compare_semiclassical_oracle(config, kAtom, kKappa1, kKappa2, level, OracleConfig{})));

  const AmplitudeTrace cascade =
      rk4_semiclassical(Configuration::Cascade, kAtom,
                        resonant_drive(Configuration::Cascade, kAtom, kKappa1, kKappa2),
                        Level::One, OracleConfig{});
  out.push_back({"oracle", "rk4 norm drift, cascade level 1", cascade.max_norm_drift, 1e-8,
                 cascade.max_norm_drift <= 1e-8, {}});

  for (const auto config : kSolvable)
    for (const auto level : kLevels)
      out.push_back(
          from_report("oracle", "block exponential vs closed form, " + tag(config, level),
                      compare_quantized_oracle(config, kCavity, 1, 1, level, 100.0, 2000)));

  for (const auto config : kSolvable) {
    const DressedBasis basis = dressed_basis(config, kCavity, 1, 1);
    const RealMatrix3& t = basis.rotation;
    const double ortho = max_abs_diff(multiply(t, transpose(t)), real_identity());
    const ComplexMatrix3 h = quantized_block(config, kCavity, 1, 1);
    double residual = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      const Amplitudes v{t[k][0], t[k][1], t[k][2]};
      const Amplitudes hv = h * v;
      for (std::size_t i = 0; i < 3; ++i)
        residual = std::max(residual, std::abs(hv[i] - basis.eigenvalues[k] * v[i]));
    }
    out.push_back({"oracle", "dressed basis orthogonality, " + std::string(to_string(config)),
                   ortho, 1e-12, ortho <= 1e-12, {}});
    out.push_back({"oracle", "dressed basis eigen-residual, " + std::string(to_string(config)),
                   residual, 1e-12, residual <= 1e-12, {}});
  }
}

void symmetry(std::vector<CheckResult>& out) {
  const std::array<std::pair<Level, Level>, 3> pairs{
      {{Level::One, Level::Three}, {Level::Two, Level::Two}, {Level::Three, Level::One}}};
  for (const auto& [lam, vee] : pairs) {
    SymmetryParams p = default_symmetry_params(SymmetryKind::Semiclassical);
    p.lambda_level = lam;
    p.vee_level = vee;
    p.kappa1 = kKappa1;
    p.kappa2 = kKappa2;
    out.push_back(from_report("symmetry",
                              "semiclassical lambda level " + std::to_string(level_number(lam)) +
                                  " vs vee level " + std::to_string(level_number(vee)),
                              symmetry_report(p)));
  }
  for (const auto& [lam, vee] : {std::pair{Level::One, Level::Three}, {Level::Two, Level::Two}}) {
    SymmetryParams p = default_symmetry_params(SymmetryKind::QuantizedNumberState);
    p.lambda_level = lam;
    p.vee_level = vee;
    p.cavity = kCavity;
    p.n = 1;
    p.m = 1;
    const ComparisonReport r = symmetry_report(p);
    const bool broken = symmetry_broken(r);
    out.push_back({"symmetry",
                   "quantized lambda level " + std::to_string(level_number(lam)) +
                       " vs vee level " + std::to_string(level_number(vee)),
                   r.max_abs_error, r.tolerance, broken,
                   broken ? "expected broken, observed" : "expected broken, not observed"});
  }
}

void correspondence(std::vector<CheckResult>& out) {
  struct Case {
    Configuration config;
    int n, m;
  };
  const std::array<Case, 6> cases{{{Configuration::Lambda, 1, 1},
                                   {Configuration::Vee, 1, 1},
                                   {Configuration::Lambda, 400, 400},
                                   {Configuration::Vee, 400, 400},
                                   {Configuration::Lambda, 0, 3},
                                   {Configuration::Vee, 0, 1}}};
  for (const auto& c : cases)
    for (const auto level : kLevels)
      out.push_back(from_report("correspondence",
                                tag(c.config, level) + ", n=" + std::to_string(c.n) +
                                    " m=" + std::to_string(c.m),
                                bohr_correspondence(c.config, kCavity, c.n, c.m, level)));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "oracle", "symmetry", "correspondence"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  std::vector<CheckResult> out;
  if (name == "algebra" || name == "all") algebra(out);
  if (name == "oracle" || name == "all") oracle(out);
  if (name == "symmetry" || name == "all") symmetry(out);
  if (name == "correspondence" || name == "all") correspondence(out);
  if (name != "all" &&
      std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + name +
                                "' (expected algebra, oracle, symmetry, correspondence or all)");
  return out;
}

}  // namespace trilevel::cli
