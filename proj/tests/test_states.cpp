#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esdqec/measures.hpp"
#include "esdqec/states.hpp"

#include <numbers>
#include <random>

using namespace esdqec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::phi, Family::psi, Family::zeta, Family::xi})
    CHECK(family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(family_from_string("bell"), std::invalid_argument);
}

TEST_CASE("family states at special angles") {
  const TwoQubitPure bell = make_family_state(Family::phi, kPi / 4.0, 0.0);
  CHECK(std::abs(bell.amplitude(0) - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(bell.amplitude(3) - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(bell.amplitude(1)) == 0.0);
  CHECK(std::abs(bell.amplitude(2)) == 0.0);

  const TwoQubitPure psi0 = make_family_state(Family::psi, 0.0, 0.0);
  CHECK(psi0.amplitude(2) == Complex(1.0));  // |10>

  const TwoQubitPure zeta_half = make_family_state(Family::zeta, kPi / 2.0, 0.0);
  CHECK(std::abs(zeta_half.amplitude(0) - Complex(1.0)) < 1e-15);  // |00>

  const TwoQubitPure xi0 = make_family_state(Family::xi, 0.0, 0.4);
  CHECK(xi0.amplitude(3) == Complex(1.0));  // |11>
}

TEST_CASE("relative phase lands on the second amplitude") {
  const double alpha = 0.6, beta = 1.1;
  const TwoQubitPure phi = make_family_state(Family::phi, alpha, beta);
  CHECK(std::abs(phi.amplitude(3) - Complex(std::cos(alpha))) < 1e-15);
  CHECK(std::abs(phi.amplitude(0) - std::polar(std::sin(alpha), beta)) < 1e-15);
  const TwoQubitPure xi = make_family_state(Family::xi, alpha, beta);
  CHECK(std::abs(xi.amplitude(2) - std::polar(std::sin(alpha), beta)) < 1e-15);
}

TEST_CASE("family states are normalized for arbitrary angles") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Family f = static_cast<Family>(rng() % 4);
    const TwoQubitPure s = make_family_state(f, angle(rng), angle(rng));
    CHECK(std::abs(s.vector().squaredNorm() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(make_family_state(Family::phi, std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("phi and psi families carry concurrence |sin 2a|; zeta and xi none") {
  for (double alpha : {0.2, 0.5, kPi / 4.0, 1.1}) {
    for (double beta : {0.0, 0.7}) {
      CHECK(concurrence(make_family_state(Family::phi, alpha, beta).density()) ==
            doctest::Approx(std::abs(std::sin(2.0 * alpha))).epsilon(1e-10));
      CHECK(concurrence(make_family_state(Family::psi, alpha, beta).density()) ==
            doctest::Approx(std::abs(std::sin(2.0 * alpha))).epsilon(1e-10));
      CHECK(concurrence(make_family_state(Family::zeta, alpha, beta).density()) < 1e-10);
      CHECK(concurrence(make_family_state(Family::xi, alpha, beta).density()) < 1e-10);
    }
  }
}

TEST_CASE("general state reduces to the families on its slices") {
  const double alpha = 0.8, phase = 0.5;
  // delta = 0 keeps only the |11>/|00> sector: the phi family with eps1 as phase.
  const TwoQubitPure phi_slice = make_general_state(alpha, 0.3, 0.0, phase, 1.7, 2.9);
  const TwoQubitPure phi = make_family_state(Family::phi, alpha, phase);
  CHECK((phi_slice.amplitudes() - phi.amplitudes()).cwiseAbs().maxCoeff() < 1e-15);
  // delta = pi/2 keeps only |10>/|01>: the psi family driven by beta_mix and eps3 - eps2.
  const TwoQubitPure psi_slice = make_general_state(0.3, alpha, kPi / 2.0, 1.7, 0.0, phase);
  const TwoQubitPure psi = make_family_state(Family::psi, alpha, phase);
  CHECK((psi_slice.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("general state is normalized for arbitrary parameters") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  for (int trial = 0; trial < 50; ++trial) {
    const TwoQubitPure s = make_general_state(angle(rng), angle(rng), angle(rng), angle(rng),
                                              angle(rng), angle(rng));
    CHECK(std::abs(s.vector().squaredNorm() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(make_general_state(0.1, 0.2, std::nan(""), 0.0, 0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("TwoQubitPure validates normalization and indices") {
  Eigen::Vector4cd amps = Eigen::Vector4cd::Zero();
  amps(0) = 1.0;
  const TwoQubitPure s(amps);
  CHECK(s.amplitude(0) == Complex(1.0));
  CHECK_THROWS_AS(s.amplitude(4), std::out_of_range);
  CHECK_THROWS_AS(TwoQubitPure(Eigen::Vector4cd(2.0 * amps)), std::invalid_argument);
  CHECK((s.density().matrix().diagonal().real().sum()) == doctest::Approx(1.0));
}
