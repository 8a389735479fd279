#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esdqec/channels.hpp"
#include "esdqec/measures.hpp"
#include "esdqec/sweep.hpp"

#include <numbers>
#include <random>

using namespace esdqec;

namespace {

constexpr double kPi = std::numbers::pi;
std::mt19937_64 rng(1001);

DensityOperator random_density() {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityOperator(std::move(rho));
}

ComplexMatrix random_unitary2() {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  return Eigen::HouseholderQR<ComplexMatrix>(g).householderQ();
}

// X-state concurrence in closed form; the Wootters routine must match it.
double x_state_concurrence(const ComplexMatrix& rho) {
  const double inner = std::abs(rho(1, 2)) - std::sqrt(rho(0, 0).real() * rho(3, 3).real());
  const double outer = std::abs(rho(0, 3)) - std::sqrt(rho(1, 1).real() * rho(2, 2).real());
  return 2.0 * std::max({0.0, inner, outer});
}

}  // namespace

TEST_CASE("fidelity basics") {
  const TwoQubitPure bell = make_family_state(Family::phi, kPi / 4.0, 0.0);
  CHECK(fidelity(bell, bell.density()) == doctest::Approx(1.0).epsilon(1e-14));
  const TwoQubitPure other = make_family_state(Family::psi, kPi / 4.0, 0.0);
  CHECK(fidelity(bell, other.density()) < 1e-14);
  ComplexMatrix big = ComplexMatrix::Identity(8, 8);
  big /= 8.0;
  CHECK_THROWS_AS(fidelity(bell, DensityOperator(big)), std::invalid_argument);
}

TEST_CASE("fidelity of the damped phi family is the exact closed form") {
  for (double alpha : {0.0, 0.4, kPi / 4.0, 1.2, kPi / 2.0}) {
    const TwoQubitPure phi = make_family_state(Family::phi, alpha, 0.0);
    const double c2 = std::cos(alpha) * std::cos(alpha);
    for (int gi = 0; gi <= 100; ++gi) {
      const double g = gi / 100.0;
      const DensityOperator damped = apply_damping(phi.density(), DampingChannel(g, 2));
      CHECK(std::abs(fidelity(phi, damped) - (1.0 - 2.0 * g * c2 + g * g * c2)) < 1e-12);
    }
  }
}

TEST_CASE("concurrence of pure states") {
  CHECK(concurrence(make_family_state(Family::phi, kPi / 4.0, 0.0).density()) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(make_family_state(Family::psi, kPi / 4.0, 1.3).density()) ==
        doctest::Approx(1.0).epsilon(1e-12));
  Eigen::Vector4cd product = Eigen::Vector4cd::Zero();
  product(2) = 1.0;  // |10>
  CHECK(concurrence(TwoQubitPure(product).density()) < 1e-12);
  ComplexMatrix mixed = ComplexMatrix::Identity(4, 4);
  mixed /= 4.0;
  CHECK(concurrence(DensityOperator(mixed)) == 0.0);
}

TEST_CASE("damped phi family matches the X-state closed form pointwise") {
  for (double alpha : {kPi / 8.0, kPi / 6.0, kPi / 4.0, 1.0}) {
    const TwoQubitPure phi = make_family_state(Family::phi, alpha, 0.0);
    const double s = std::sin(alpha), c = std::cos(alpha);
    for (int gi = 0; gi <= 100; ++gi) {
      const double g = gi / 100.0;
      const DensityOperator damped = apply_damping(phi.density(), DampingChannel(g, 2));
      const double expected =
          2.0 * (1.0 - g) * std::max(0.0, std::abs(s * c) - g * c * c);
      CHECK(std::abs(concurrence(damped) - expected) < 1e-10);
    }
  }
}

TEST_CASE("Wootters agrees with the X-state formula on random X states") {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Vector4d diag;
    for (int i = 0; i < 4; ++i) diag(i) = uniform(rng) + 0.05;
    diag /= diag.sum();
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) rho(i, i) = diag(i);
    const double limit_outer = std::sqrt(diag(0) * diag(3));
    const double limit_inner = std::sqrt(diag(1) * diag(2));
    rho(0, 3) = std::polar(uniform(rng) * limit_outer, 2.0 * kPi * uniform(rng));
    rho(3, 0) = std::conj(rho(0, 3));
    rho(1, 2) = std::polar(uniform(rng) * limit_inner, 2.0 * kPi * uniform(rng));
    rho(2, 1) = std::conj(rho(1, 2));
    const DensityOperator state(rho);
    CHECK(std::abs(concurrence(state) - x_state_concurrence(rho)) < 1e-9);
  }
}

TEST_CASE("concurrence is invariant under local unitaries and bounded") {
  for (int trial = 0; trial < 30; ++trial) {
    const DensityOperator rho = random_density();
    const double c = concurrence(rho);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    const ComplexMatrix local = kron(random_unitary2(), random_unitary2());
    const DensityOperator rotated(ComplexMatrix(local * rho.matrix() * local.adjoint()));
    CHECK(std::abs(concurrence(rotated) - c) < 1e-9);
  }
}

TEST_CASE("curve factories validate and clamp") {
  const FidelityCurve fc = make_fidelity_curve({0.0, 0.5, 1.0}, {1.0, 1.0 + 5e-13, 0.25});
  CHECK(fc.values[1] == 1.0);
  CHECK_THROWS_AS(make_fidelity_curve({0.0, 0.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_fidelity_curve({0.5, 0.5}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_fidelity_curve({0.0, 1.5}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_fidelity_curve({0.0, 0.5}, {1.0, 1.1}), std::invalid_argument);
  const ConcurrenceCurve cc = make_concurrence_curve({0.0, 1.0}, {-5e-11, 0.5});
  CHECK(cc.values[0] == 0.0);
  CHECK_THROWS_AS(make_concurrence_curve({0.0}, {-1e-9}), std::invalid_argument);
}

TEST_CASE("esd_threshold on synthetic curves") {
  CHECK(esd_threshold([](double g) { return std::max(0.0, 0.5 - g); }) ==
        doctest::Approx(0.5).epsilon(2e-6));
  CHECK(esd_threshold([](double g) { return 1.0 - 0.9 * g; }) == 1.0);
  CHECK_THROWS_AS(esd_threshold([](double) { return 0.0; }), std::invalid_argument);
  CHECK_THROWS_AS(esd_threshold([](double g) { return std::max(0.0, 0.5 - g); }, -1.0),
                  std::invalid_argument);
}

TEST_CASE("uncoded phi dies at tan(alpha), uncoded psi never does") {
  const Pipeline phi(Family::phi, kPi / 6.0, 0.0, CodeKind::none);
  const double gamma_star =
      esd_threshold([&](double g) { return phi.concurrence_at(g); });
  CHECK(gamma_star == doctest::Approx(std::tan(kPi / 6.0)).epsilon(1e-5));

  const Pipeline psi(Family::psi, kPi / 3.0, 0.0, CodeKind::none);
  CHECK(esd_threshold([&](double g) { return psi.concurrence_at(g); }) == 1.0);
}

TEST_CASE("series coefficient extraction is exact through quartic terms") {
  CHECK(series_coefficient_gamma2([](double g) { return 1.0 - 5.0 * g * g; }) ==
        doctest::Approx(5.0).epsilon(1e-9));
  CHECK(series_coefficient_gamma2(
            [](double g) { return 1.0 - 3.0 * g * g + 10.0 * g * g * g - 7.0 * g * g * g * g; }) ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK_THROWS_AS(series_coefficient_gamma2([](double) { return 0.9; }), std::invalid_argument);
}

TEST_CASE("coded psi at alpha near pi/2 loses fidelity at the bare-code rate") {
  // cos(2a) -> -1 leaves the [6,2] coefficient at 12/4 = 3.
  const Pipeline pipeline(Family::psi, kPi / 2.0, 0.0, CodeKind::nonlocal62);
  const double c2 =
      series_coefficient_gamma2([&](double g) { return pipeline.fidelity_at(g); });
  CHECK(c2 == doctest::Approx(3.0).epsilon(0.01));
}
