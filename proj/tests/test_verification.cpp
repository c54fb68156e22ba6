#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catch_amalgamated.hpp"
#include "test_support.hpp"
#include "trilevel/verification.hpp"

using namespace trilevel;
using trilevel::test::uniform;
using trilevel::test::uniform_int;

namespace {

const AtomParams kAtom{1.0, 0.6};
const CavityParams kCavity{0.0, 0.0, 0.2, 0.1};
constexpr std::array<Level, 3> kLevels{Level::One, Level::Two, Level::Three};

}  // namespace

TEST_CASE("oracle configuration is validated", "[verification][errors]") {
  CHECK_NOTHROW(OracleConfig{}.validate());
  CHECK_THROWS_AS((OracleConfig{0.0, 0.0, 10.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((OracleConfig{0.0, 1e-6, -1.0}.validate()), std::invalid_argument);
}

TEST_CASE("finalize sets the verdict from the error and tolerance", "[verification]") {
  ComparisonReport r;
  r.max_abs_error = 1e-7;
  r.tolerance = 1e-6;
  CHECK(finalize(r).passed);
  r.max_abs_error = 2e-6;
  CHECK_FALSE(finalize(r).passed);
}

TEST_CASE("resonant drive has zero detuning", "[verification]") {
  for (const auto c : {Configuration::Lambda, Configuration::Vee, Configuration::Cascade}) {
    const DriveParams d = resonant_drive(c, kAtom, 0.2, 0.1);
    const DetuningSet set = detunings(c, kAtom, d.big_omega1, d.big_omega2);
    CHECK(std::abs(set.delta1) <= 1e-15);
    CHECK(std::abs(set.delta2) <= 1e-15);
    CHECK(d.kappa1 == 0.2);
    CHECK(d.kappa2 == 0.1);
  }
}

TEST_CASE("default RK4 step resolves the fastest time scale", "[verification]") {
  const DriveParams d = resonant_drive(Configuration::Lambda, kAtom, 0.2, 0.1);
  const double h = default_rk4_step(Configuration::Lambda, kAtom, d, 100.0);
  CHECK(h > 0.0);
  CHECK(h <= 2 * std::numbers::pi / rabi_frequency(0.2, 0.1) / 2000.0);
  CHECK(h <= 2 * std::numbers::pi / d.big_omega1 / 2000.0);
}

TEST_CASE("RK4 integrates every step up to t_max", "[verification]") {
  const DriveParams d = resonant_drive(Configuration::Lambda, kAtom, 0.2, 0.1);
  const AmplitudeTrace tr =
      rk4_semiclassical(Configuration::Lambda, kAtom, d, Level::One, OracleConfig{0.03, 1e-6, 1.0});
  CHECK(tr.times.front() == 0.0);
  CHECK(tr.times.back() == Catch::Approx(1.0).margin(1e-12));
  CHECK(tr.times.size() == 35);
  CHECK(tr.amplitudes.size() == tr.times.size());
  CHECK(tr.amplitudes.front() == basis_amplitudes(Level::One));
}

TEST_CASE("RK4 agrees with the resonant closed forms", "[verification][oracle]") {
  for (const auto c : {Configuration::Lambda, Configuration::Vee})
    for (const auto l : kLevels) {
      const ComparisonReport r = compare_semiclassical_oracle(c, kAtom, 0.2, 0.1, l, OracleConfig{});
      INFO(to_string(c) << " level " << level_number(l) << " error " << r.max_abs_error);
      CHECK(r.passed);
      CHECK(r.max_abs_error <= 1e-6);
    }
}

TEST_CASE("RK4 rejects a run whose norm drifts", "[verification][errors]") {
  const DriveParams d = resonant_drive(Configuration::Lambda, kAtom, 0.2, 0.1);
  CHECK_THROWS_AS(rk4_semiclassical(Configuration::Lambda, kAtom, d, Level::One,
                                    OracleConfig{1.5, 1e-6, 100.0}),
                  OracleQualityError);
}

TEST_CASE("cascade RK4 conserves the norm", "[verification]") {
  const DriveParams d = resonant_drive(Configuration::Cascade, kAtom, 0.2, 0.1);
  const AmplitudeTrace tr = rk4_semiclassical(Configuration::Cascade, kAtom, d, Level::One,
                                              OracleConfig{});
  CHECK(tr.max_norm_drift <= 1e-8);
}

TEST_CASE("matrix exponential of known generators", "[verification]") {
  CHECK(max_abs_diff(matrix_exponential(ComplexMatrix3{}), ComplexMatrix3::identity()) == 0.0);
  const ComplexMatrix3 d = matrix_exponential(ComplexMatrix3::diagonal(0.3, -1.2, 40.0));
  CHECK(std::abs(d(0, 0) - std::polar(1.0, -0.3)) <= 1e-13);
  CHECK(std::abs(d(1, 1) - std::polar(1.0, 1.2)) <= 1e-13);
  CHECK(std::abs(d(2, 2) - std::polar(1.0, -40.0)) <= 1e-12);
}

TEST_CASE("block exponential is unitary and a one-parameter group", "[verification][property]") {
  for (int trial = 0; trial < 30; ++trial) {
    const CavityParams cav{0.0, 0.0, uniform(0.0, 1.0), uniform(0.0, 1.0)};
    const int n = uniform_int(0, 10), m = uniform_int(0, 10);
    const double s = uniform(0.0, 50.0), t = uniform(0.0, 50.0);
    for (const auto c : {Configuration::Lambda, Configuration::Vee, Configuration::Cascade}) {
      const ComplexMatrix3 us = block_exponential(c, cav, n, m, s);
      const ComplexMatrix3 ut = block_exponential(c, cav, n, m, t);
      CHECK(max_abs_diff(us * us.adjoint(), ComplexMatrix3::identity()) <= 1e-12);
      CHECK(max_abs_diff(us * ut, block_exponential(c, cav, n, m, s + t)) <= 1e-11);
      CHECK(max_abs_diff(ut, trilevel::test::eigen_propagator(quantized_block(c, cav, n, m), t)) <=
            1e-11);
    }
  }
}

TEST_CASE("block exponential agrees with the quantized closed forms", "[verification][oracle]") {
  for (const auto c : {Configuration::Lambda, Configuration::Vee})
    for (const auto l : kLevels) {
      const ComparisonReport r = compare_quantized_oracle(c, kCavity, 1, 1, l, 100.0, 2000);
      CHECK(r.max_abs_error <= 1e-10);
      CHECK(r.passed);
    }
}

TEST_CASE("inversion pairs are enforced", "[verification][errors]") {
  CHECK_NOTHROW(require_inversion_pair(Level::One, Level::Three));
  CHECK_NOTHROW(require_inversion_pair(Level::Two, Level::Two));
  CHECK_THROWS_AS(require_inversion_pair(Level::One, Level::One), std::invalid_argument);
  SymmetryParams p = default_symmetry_params(SymmetryKind::Semiclassical);
  p.lambda_level = Level::Two;
  p.vee_level = Level::Three;
  CHECK_THROWS_AS(symmetry_report(p), std::invalid_argument);
  p.vee_level = Level::Two;
  p.levels.clear();
  CHECK_THROWS_AS(symmetry_report(p), std::invalid_argument);
}

TEST_CASE("default symmetry tolerances", "[verification]") {
  CHECK(default_symmetry_params(SymmetryKind::Semiclassical).tolerance == 1e-12);
  CHECK(default_symmetry_params(SymmetryKind::QuantizedNumberState).tolerance == 1e-12);
  CHECK(default_symmetry_params(SymmetryKind::Coherent).tolerance == 0.05);
}

TEST_CASE("semiclassical symmetry holds and quantized symmetry breaks", "[verification]") {
  SymmetryParams p = default_symmetry_params(SymmetryKind::Semiclassical);
  p.kappa1 = 0.2;
  p.kappa2 = 0.1;
  for (const auto l : kLevels) {
    p.lambda_level = l;
    p.vee_level = static_cast<Level>(4 - level_number(l));
    const ComparisonReport r = symmetry_report(p);
    CHECK(r.passed);
    CHECK(r.series_compared.size() == 3);
  }

  SymmetryParams q = default_symmetry_params(SymmetryKind::QuantizedNumberState);
  q.cavity = kCavity;
  q.n = q.m = 1;
  q.lambda_level = Level::One;
  q.vee_level = Level::Three;
  const ComparisonReport r = symmetry_report(q);
  CHECK_FALSE(r.passed);
  CHECK(symmetry_broken(r));
}

TEST_CASE("coherent symmetry report compares on the supplied grid", "[verification]") {
  SymmetryParams p = default_symmetry_params(SymmetryKind::Coherent);
  p.cavity = kCavity;
  p.lambda_field = CoherentSpec{0.0, 0.0};
  p.vee_field = CoherentSpec{0.0, 0.0};
  p.lambda_level = Level::Two;
  p.vee_level = Level::Two;
  p.times = uniform_grid(0.0, 5.0, 11);
  const ComparisonReport r = symmetry_report(p);
  CHECK(r.argmax_time >= 0.0);
  CHECK(r.argmax_time <= 5.0);
  CHECK(r.tolerance == 0.05);
}

TEST_CASE("quantized dynamics equals semiclassical dynamics at matched couplings",
          "[verification][property]") {
  for (int trial = 0; trial < 10; ++trial) {
    const CavityParams cav{0.0, 0.0, uniform(0.01, 1.0), uniform(0.01, 1.0)};
    const int n = uniform_int(1, 50), m = uniform_int(1, 50);
    for (const auto c : {Configuration::Lambda, Configuration::Vee})
      for (const auto l : kLevels) {
        const ComparisonReport r = bohr_correspondence(c, cav, n, m, l);
        INFO(to_string(c) << " n=" << n << " m=" << m << " err " << r.max_abs_error);
        CHECK(r.passed);
      }
  }
  const EffectiveCouplings k = matched_couplings(Configuration::Vee, kCavity, 3, 2);
  CHECK(k.k1 == Catch::Approx(0.2 * std::sqrt(2.0)));
  CHECK(k.k2 == Catch::Approx(0.1 * 2.0));
}
