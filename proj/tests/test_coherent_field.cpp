#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "catch_amalgamated.hpp"
#include "test_support.hpp"
#include "trilevel/coherent_field.hpp"

using namespace trilevel;
using trilevel::test::uniform;

namespace {

const CavityParams kCavity{0.0, 0.0, 0.2, 0.1};

double tail_beyond(double nbar, int cutoff) {
  // Independent reference: 1 - sum via a recurrence in linear space.
  double w = std::exp(-nbar), sum = 0.0;
  for (int k = 0; k <= cutoff; ++k) {
    sum += w;
    w *= nbar / (k + 1);
  }
  return 1.0 - sum;
}

}  // namespace

TEST_CASE("poisson weights for small means", "[coherent]") {
  const std::vector<double> zero = poisson_weights(0.0, 5);
  CHECK(zero[0] == 1.0);
  CHECK(std::accumulate(zero.begin() + 1, zero.end(), 0.0) == 0.0);

  const std::vector<double> one = poisson_weights(1.0, 4);
  CHECK(one[0] == Catch::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(one[1] == Catch::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(one[2] == Catch::Approx(std::exp(-1.0) / 2).epsilon(1e-15));
  CHECK(one[4] == Catch::Approx(std::exp(-1.0) / 24).epsilon(1e-14));
}

TEST_CASE("poisson weights match a linear-space recurrence", "[coherent][oracle]") {
  for (const double nbar : {0.5, 3.0, 20.0, 30.0, 80.0}) {
    const std::vector<double> w = poisson_weights(nbar, 150);
    double ref = std::exp(-nbar);
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK(w[k] == Catch::Approx(ref).epsilon(1e-12).margin(1e-300));
      ref *= nbar / static_cast<double>(k + 1);
    }
  }
}

TEST_CASE("default cutoff leaves a negligible tail", "[coherent]") {
  CHECK(default_cutoff(0.0) == 20);
  CHECK(default_cutoff(30.0) >= static_cast<int>(std::ceil(30 + 10 * std::sqrt(30.0))));
  for (const double nbar : {0.0, 1.0, 5.0, 20.0, 30.0, 100.0}) {
    const int c = default_cutoff(nbar);
    CHECK(c >= 20);
    CHECK(tail_beyond(nbar, c) <= 1e-12);
    const std::vector<double> w = poisson_weights(nbar, c);
    CHECK(std::accumulate(w.begin(), w.end(), 0.0) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("invalid means and cutoffs are domain errors", "[coherent][errors]") {
  CHECK_THROWS_AS(poisson_weights(-1.0, 3), std::domain_error);
  CHECK_THROWS_AS(poisson_weights(1.0, -1), std::domain_error);
  CHECK_THROWS_AS(default_cutoff(std::nan("")), std::domain_error);
  CHECK_THROWS_AS((CoherentSpec{-2.0, 1.0}.resolved()), std::domain_error);
}

TEST_CASE("resolved spec keeps explicit cutoffs", "[coherent]") {
  const CoherentSpec s = CoherentSpec{4.0, 9.0, 7, -1}.resolved();
  CHECK(s.cutoff_n == 7);
  CHECK(s.cutoff_m == default_cutoff(9.0));
}

TEST_CASE("averaged populations sum to the retained weight mass", "[coherent][property]") {
  const std::vector<double> times = uniform_grid(0.0, 200.0, 301);
  for (const auto c : {Configuration::Lambda, Configuration::Vee})
    for (const auto l : {Level::One, Level::Two, Level::Three})
      for (const auto idx : {WeightIndexing::ManifoldLabel, WeightIndexing::InitialOccupation}) {
        const CoherentSpec spec{uniform(0.0, 10.0), uniform(0.0, 10.0), 8, 6, idx};
        const AveragedTrace tr = averaged_probabilities(c, kCavity, spec, l, times);
        CHECK(tr.weight_mass < 1.0);
        for (std::size_t s = 0; s < times.size(); ++s)
          CHECK(tr.p1[s] + tr.p2[s] + tr.p3[s] == Catch::Approx(tr.weight_mass).margin(1e-12));
      }
}

TEST_CASE("full cutoffs retain unit mass", "[coherent]") {
  const std::vector<double> times = uniform_grid(0.0, 50.0, 101);
  const AveragedTrace tr = averaged_probabilities(Configuration::Lambda, kCavity,
                                                  CoherentSpec{30.0, 20.0}, Level::One, times);
  CHECK(tr.weight_mass == Catch::Approx(1.0).margin(1e-11));
  CHECK(tr.p1.front() == Catch::Approx(1.0).margin(1e-11));
}

TEST_CASE("vacuum means reduce to the single number-state manifold", "[coherent]") {
  const std::vector<double> times = uniform_grid(0.0, 80.0, 200);
  for (const auto c : {Configuration::Lambda, Configuration::Vee}) {
    const AveragedTrace tr =
        averaged_probabilities(c, kCavity, CoherentSpec{0.0, 0.0}, Level::Two, times);
    for (std::size_t s = 0; s < times.size(); ++s) {
      const ProbabilityTriple p = quantized_probabilities(c, kCavity, 0, 0, Level::Two, times[s]);
      CHECK(tr.p1[s] == p.p1);
      CHECK(tr.p2[s] == p.p2);
      CHECK(tr.p3[s] == p.p3);
    }
  }
}

TEST_CASE("averaged traces are bit-identical across runs", "[coherent]") {
  const std::vector<double> times = uniform_grid(0.0, 300.0, 500);
  const CoherentSpec spec{12.0, 7.0};
  const AveragedTrace a = averaged_probabilities(Configuration::Vee, kCavity, spec, Level::One, times);
  const AveragedTrace b = averaged_probabilities(Configuration::Vee, kCavity, spec, Level::One, times);
  CHECK(a.p1 == b.p1);
  CHECK(a.p2 == b.p2);
  CHECK(a.p3 == b.p3);
  CHECK(a.weight_mass == b.weight_mass);
}

TEST_CASE("occupation indexing attaches the weights to the prepared field", "[coherent]") {
  // Lambda level 1 sits in |n-1, m+1, 1>: photon numbers (i, j) map to
  // manifold (i + 1, j - 1).
  const EffectiveCouplings k = weighted_couplings(Configuration::Lambda, kCavity, 3, 4,
                                                  Level::One, WeightIndexing::InitialOccupation);
  const EffectiveCouplings ref = quantized_couplings(Configuration::Lambda, kCavity, 4, 3);
  CHECK(k.k1 == ref.k1);
  CHECK(k.k2 == ref.k2);
  const EffectiveCouplings same = weighted_couplings(Configuration::Vee, kCavity, 3, 4,
                                                     Level::Two, WeightIndexing::InitialOccupation);
  const EffectiveCouplings vee = quantized_couplings(Configuration::Vee, kCavity, 3, 4);
  CHECK(same.k1 == vee.k1);
  CHECK(same.k2 == vee.k2);
  CHECK_THROWS_AS(weighted_couplings(Configuration::Cascade, kCavity, 1, 1, Level::One,
                                     WeightIndexing::InitialOccupation),
                  std::invalid_argument);
}

TEST_CASE("time grids are validated", "[coherent][errors]") {
  CHECK_THROWS_AS(averaged_probabilities(Configuration::Lambda, kCavity, {}, Level::One, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(averaged_probabilities(Configuration::Lambda, kCavity, {}, Level::One,
                                         {0.0, 1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(uniform_grid(1.0, 1.0, 10), std::invalid_argument);
  const std::vector<double> g = uniform_grid(0.0, 10.0, 11);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 10.0);
  CHECK(g[3] == Catch::Approx(3.0).margin(1e-15));
}

TEST_CASE("time scale estimates", "[coherent]") {
  const CoherentSpec spec{30.0, 20.0};
  const double mean = mean_rabi_frequency(Configuration::Lambda, kCavity, spec, Level::One);
  CHECK(mean == Catch::Approx(std::sqrt(0.04 * 21 + 0.01 * 30)).epsilon(0.01));
  CHECK(max_rabi_frequency(Configuration::Lambda, kCavity, spec, Level::One) > mean);
  const double tr = revival_time_estimate(Configuration::Lambda, kCavity, spec, Level::One);
  CHECK(tr == Catch::Approx(2 * std::numbers::pi * mean / 0.01).epsilon(1e-12));
  CHECK(revival_time_estimate(Configuration::Lambda, kCavity, CoherentSpec{0.0, 0.0}, Level::One) >= 0.0);
  CHECK(recommended_samples(10.0, 0.1) == 2000);
  CHECK(recommended_samples(1000.0, 1.0) ==
        static_cast<std::size_t>(std::ceil(40.0 * 1000.0 / (2 * std::numbers::pi))) + 1);
}

TEST_CASE("envelope metrics on a synthetic collapse and revival", "[coherent]") {
  const std::vector<double> t = uniform_grid(0.0, 400.0, 8001);
  std::vector<double> v(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double env = std::exp(-t[k] / 20.0) + 0.6 * std::exp(-std::pow((t[k] - 300.0) / 30.0, 2));
    v[k] = 0.5 + 0.01 * t[k] / 400.0 + 0.4 * env * std::cos(t[k]);
  }
  const EnvelopeMetrics e = envelope_metrics(t, v, 4 * std::numbers::pi);
  CHECK(e.initial_amplitude == Catch::Approx(0.8 * std::exp(-0.3)).epsilon(0.3));
  CHECK(e.collapse_amplitude < 0.01);
  CHECK(e.revival_time == Catch::Approx(300.0).margin(10.0));
  CHECK(e.collapsed());
  CHECK(e.revived());
}

TEST_CASE("envelope metrics of a steady oscillation report no collapse", "[coherent]") {
  const std::vector<double> t = uniform_grid(0.0, 200.0, 4001);
  std::vector<double> v(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) v[k] = std::cos(t[k]);
  const EnvelopeMetrics e = envelope_metrics(t, v, 4 * std::numbers::pi);
  CHECK(e.initial_amplitude == Catch::Approx(2.0).margin(0.01));
  CHECK_FALSE(e.collapsed());
  CHECK_FALSE(e.revived());
}

TEST_CASE("envelope metrics reject series that are too short", "[coherent][errors]") {
  const std::vector<double> t = uniform_grid(0.0, 10.0, 100);
  const std::vector<double> v(t.size(), 0.0);
  CHECK_THROWS_AS(envelope_metrics(t, v, 8.0), DiagnosticError);
  CHECK_THROWS_AS(envelope_metrics(uniform_grid(0.0, 100.0, 20), std::vector<double>(20, 0.0), 4.0),
                  DiagnosticError);
  CHECK_THROWS_AS(envelope_metrics(t, std::vector<double>(5, 0.0), 1.0), std::invalid_argument);

  const AveragedTrace early = averaged_probabilities(
      Configuration::Lambda, kCavity, CoherentSpec{30.0, 20.0}, Level::One, uniform_grid(0.0, 100.0, 2000));
  CHECK_THROWS_AS(envelope_metrics(early, Level::One), DiagnosticError);
}
