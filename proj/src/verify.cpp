#include "esdqec/verify.hpp"

#include "esdqec/channels.hpp"
#include "esdqec/code41.hpp"
#include "esdqec/code62.hpp"
#include "esdqec/measures.hpp"
#include "esdqec/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace esdqec {

namespace {

constexpr double kPi = std::numbers::pi;

void add_bound(VerifyReport& rep, std::string criterion, std::string name, double measured,
               double bound) {
  rep.checks.push_back(
      {std::move(criterion), std::move(name), measured, 0.0, bound, std::abs(measured) <= bound});
}

void add_near(VerifyReport& rep, std::string criterion, std::string name, double measured,
              double expected, double tol) {
  rep.checks.push_back({std::move(criterion), std::move(name), measured, expected, tol,
                        std::abs(measured - expected) <= tol});
}

void add_near_rel(VerifyReport& rep, std::string criterion, std::string name, double measured,
                  double expected, double rel_tol) {
  rep.checks.push_back({std::move(criterion), std::move(name), measured, expected, rel_tol,
                        std::abs(measured - expected) <= rel_tol * std::abs(expected)});
}

std::string angle_tag(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", alpha);
  return buf;
}

// ---- A1: exact closed forms for the uncoded phi and psi fidelity curves ----

void check_closed_forms(VerifyReport& rep) {
  double worst_phi = 0.0;
  double worst_psi = 0.0;
  for (int ai = 0; ai <= 8; ++ai) {
    const double alpha = ai * kPi / 16.0;
    const double c2 = std::cos(alpha) * std::cos(alpha);
    const Pipeline phi(Family::phi, alpha, 0.0, CodeKind::none);
    const Pipeline psi(Family::psi, alpha, 0.0, CodeKind::none);
    for (int gi = 0; gi <= 200; ++gi) {
      const double g = gi / 200.0;
      worst_phi = std::max(worst_phi,
                           std::abs(phi.fidelity_at(g) - (1.0 - 2.0 * g * c2 + g * g * c2)));
      worst_psi = std::max(worst_psi, std::abs(psi.fidelity_at(g) - (1.0 - g)));
    }
  }
  add_bound(rep, "A1", "uncoded phi fidelity vs closed form, 9 alphas x 201 gammas", worst_phi,
            1e-12);
  add_bound(rep, "A1", "uncoded psi fidelity vs closed form, 9 alphas x 201 gammas", worst_psi,
            1e-12);
}

// ---- A2/A3: small-damping fidelity loss coefficients for both codes ----

double series_62(Family family, double alpha, double beta) {
  const double s2a = std::sin(2.0 * alpha);
  const double c2a = std::cos(2.0 * alpha);
  const double cb = std::cos(beta);
  switch (family) {
    case Family::phi:
    case Family::zeta: return (21.0 - 9.0 * c2a - s2a * s2a * cb * cb) / 4.0;
    case Family::psi:
    case Family::xi: return (12.0 - s2a * s2a * cb * cb) / 4.0;
  }
  throw std::logic_error("series_62: unknown family");
}

double series_41(Family family, double alpha, double beta) {
  const double s2a = std::sin(2.0 * alpha);
  const double c2a = std::cos(2.0 * alpha);
  const double cb = std::cos(beta);
  switch (family) {
    case Family::phi: return (8.0 - 3.0 * c2a - 2.0 * c2a * c2a) / 2.0;
    case Family::zeta: return (15.0 - 3.0 * c2a - 2.0 * s2a * s2a * cb * cb) / 4.0;
    case Family::psi: return 4.0 - c2a * c2a;
    case Family::xi: return (9.0 - 3.0 * c2a - 2.0 * s2a * s2a * cb * cb) / 4.0;
  }
  throw std::logic_error("series_41: unknown family");
}

void check_series(VerifyReport& rep, CodeKind code, const char* criterion, double rel_tol) {
  const std::array<double, 3> alphas{kPi / 6.0, kPi / 4.0, kPi / 3.0};
  const std::array<double, 2> betas{0.0, kPi / 2.0};
  for (Family family : {Family::phi, Family::zeta, Family::psi, Family::xi})
    for (double alpha : alphas)
      for (double beta : betas) {
        const Pipeline pipeline(family, alpha, beta, code);
        const double measured =
            series_coefficient_gamma2([&](double g) { return pipeline.fidelity_at(g); });
        const double expected = code == CodeKind::nonlocal62 ? series_62(family, alpha, beta)
                                                             : series_41(family, alpha, beta);
        add_near_rel(rep, criterion,
                     "gamma^2 coefficient, " + to_string(code) + " " + to_string(family) +
                         " alpha=" + angle_tag(alpha) + " beta=" + angle_tag(beta),
                     measured, expected, rel_tol);
      }
}

// ---- A4: the [6,2] code cannot tell psi from xi ----

void check_psi_xi_symmetry(VerifyReport& rep) {
  const std::array<double, 5> alphas{kPi / 12.0, kPi / 8.0, kPi / 6.0, kPi / 4.0, kPi / 3.0};
  for (double alpha : alphas) {
    double worst = 0.0;
    for (double beta : {0.0, kPi / 5.0}) {
      const Pipeline psi(Family::psi, alpha, beta, CodeKind::nonlocal62);
      const Pipeline xi(Family::xi, alpha, beta, CodeKind::nonlocal62);
      for (int gi = 0; gi <= 200; ++gi) {
        const double g = gi / 200.0;
        worst = std::max(worst, std::abs(psi.fidelity_at(g) - xi.fidelity_at(g)));
      }
    }
    add_bound(rep, "A4", "[6,2] fidelity psi vs xi, alpha=" + angle_tag(alpha) + ", full grid",
              worst, 1e-12);
  }
}

// ---- A5: disentanglement thresholds without coding ----

void check_thresholds(VerifyReport& rep) {
  const auto threshold = [](Family family, double alpha) {
    const Pipeline pipeline(family, alpha, 0.0, CodeKind::none);
    return esd_threshold([&](double g) { return pipeline.concurrence_at(g); });
  };
  for (double alpha : {kPi / 8.0, kPi / 6.0})
    add_near(rep, "A5", "sudden death of uncoded phi at tan(alpha), alpha=" + angle_tag(alpha),
             threshold(Family::phi, alpha), std::tan(alpha), 1e-5);
  add_near(rep, "A5", "no sudden death for uncoded phi at alpha=" + angle_tag(kPi / 3.0),
           threshold(Family::phi, kPi / 3.0), 1.0, 1e-12);
  for (double alpha : {kPi / 6.0, kPi / 4.0, kPi / 3.0})
    add_near(rep, "A5", "no sudden death for uncoded psi, alpha=" + angle_tag(alpha),
             threshold(Family::psi, alpha), 1.0, 1e-12);
}

// ---- A6: coding trades fidelity for entanglement lifetime ----

void check_code_induced_death(VerifyReport& rep) {
  // Coded pipelines: concurrence must hit zero strictly before gamma = 1.
  for (CodeKind code : {CodeKind::nonlocal62, CodeKind::local41})
    for (Family family : {Family::phi, Family::psi}) {
      const Pipeline pipeline(family, kPi / 4.0, 0.0, code);
      double first_zero = 1.0;
      for (int i = 1; i <= 99; ++i) {
        const double g = i / 100.0;
        if (pipeline.concurrence_at(g) <= kConcurrenceZeroTol) {
          first_zero = g;
          break;
        }
      }
      rep.checks.push_back({"A6",
                            "coded concurrence dies before gamma=1, " + to_string(code) + " " +
                                to_string(family) + " alpha=" + angle_tag(kPi / 4.0),
                            first_zero, 1.0, 0.0, first_zero < 1.0});
    }
  // The same uncoded states stay entangled all the way to gamma = 1.
  for (Family family : {Family::phi, Family::psi}) {
    const Pipeline pipeline(family, kPi / 4.0, 0.0, CodeKind::none);
    double min_c = 1.0;
    for (int i = 1; i <= 99; ++i) min_c = std::min(min_c, pipeline.concurrence_at(i / 100.0));
    rep.checks.push_back({"A6",
                          "uncoded concurrence stays positive below gamma=1, " +
                              to_string(family) + " alpha=" + angle_tag(kPi / 4.0),
                          min_c, 0.0, kConcurrenceZeroTol, min_c > kConcurrenceZeroTol});
  }
}

// ---- A7: single jumps (and one per block) are corrected exactly ----

void check_exact_correction(VerifyReport& rep) {
  std::mt19937_64 rng(0x5eed62u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto random_state = [&] {
    Eigen::Vector4cd amps;
    for (int i = 0; i < 4; ++i) amps(i) = Complex(gauss(rng), gauss(rng));
    amps /= amps.norm();
    return TwoQubitPure(amps);
  };
  const auto recover_error = [](const TwoQubitPure& state, const RecoveredState& rec) {
    return std::abs(1.0 - fidelity(state, rec.logical_rho));
  };

  double worst_62 = 0.0;
  double worst_41 = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const TwoQubitPure state = random_state();

    const StateVector code62 = SixTwoCode::instance().encode(state);
    for (int q = 0; q < SixTwoCode::kPhysicalQubits; ++q) {
      StateVector jumped = apply_lowering(code62, q);
      jumped /= jumped.norm();
      worst_62 =
          std::max(worst_62, recover_error(state, SixTwoCode::instance().measure_and_recover(
                                                      StateVector(jumped))));
    }

    const StateVector code41 = FourOneLocalCode::instance().encode(state);
    for (int q = 0; q < FourOneLocalCode::kPhysicalQubits; ++q) {
      StateVector jumped = apply_lowering(code41, q);
      jumped /= jumped.norm();
      worst_41 =
          std::max(worst_41, recover_error(state, FourOneLocalCode::instance().measure_and_recover(
                                                      StateVector(jumped))));
    }
    for (int qa = 0; qa < 4; ++qa)
      for (int qb = 4; qb < 8; ++qb) {
        StateVector jumped = apply_lowering(apply_lowering(code41, qa), qb);
        jumped /= jumped.norm();
        worst_41 = std::max(worst_41,
                            recover_error(state, FourOneLocalCode::instance().measure_and_recover(
                                                     StateVector(jumped))));
      }
  }
  add_bound(rep, "A7", "[6,2] single-jump recovery infidelity, 20 states x 6 qubits", worst_62,
            1e-12);
  add_bound(rep, "A7", "[4,1]x[4,1] recovery infidelity, 20 states x (8 singles + 16 pairs)",
            worst_41, 1e-12);
}

// ---- A8: channel and code structure invariants ----

void check_structure(VerifyReport& rep) {
  std::mt19937_64 rng(0x5eedadu);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const auto random_density = [&](Eigen::Index dim) {
    ComplexMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityOperator(std::move(rho));
  };

  double worst_trace = 0.0;
  double worst_negativity = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const double gamma = uniform(rng);
    const DensityOperator rho = random_density(Eigen::Index(1) << n);
    const DensityOperator out = apply_damping(rho, DampingChannel(gamma, n));
    worst_trace = std::max(worst_trace, std::abs(out.matrix().trace().real() - 1.0));
    worst_negativity = std::max(worst_negativity, std::max(0.0, -out.min_eigenvalue()));
  }
  add_bound(rep, "A8", "damping trace preservation, 1000 random states up to 6 qubits",
            worst_trace, 1e-12);
  add_bound(rep, "A8", "damping output negativity, 1000 random states up to 6 qubits",
            worst_negativity, 1e-10);

  const SixTwoCode& code62 = SixTwoCode::instance();
  double worst_gram = 0.0;
  for (int k = 0; k < SixTwoCode::kSyndromes; ++k)
    for (int a = 0; a < 4; ++a)
      for (int l = 0; l < SixTwoCode::kSyndromes; ++l)
        for (int b = 0; b < 4; ++b) {
          const Complex overlap = code62.recovery_vector(k, a).dot(code62.recovery_vector(l, b));
          const double expected = (k == l && a == b) ? 1.0 : 0.0;
          worst_gram = std::max(worst_gram, std::abs(overlap - expected));
        }
  add_bound(rep, "A8", "[6,2] 28-vector Gram matrix deviation from identity", worst_gram, 1e-14);

  const auto& projectors = code62.syndrome_projectors();
  ComplexMatrix total = ComplexMatrix::Zero(SixTwoCode::kDim, SixTwoCode::kDim);
  for (const ComplexMatrix& p : projectors) total += p;
  const double completeness =
      (total - ComplexMatrix::Identity(SixTwoCode::kDim, SixTwoCode::kDim)).cwiseAbs().maxCoeff();
  add_bound(rep, "A8", "[6,2] syndrome projector completeness (exact)", completeness, 0.0);

  double worst_orth = 0.0;
  for (std::size_t a = 0; a < projectors.size(); ++a)
    for (std::size_t b = 0; b < projectors.size(); ++b) {
      const ComplexMatrix product = projectors[a] * projectors[b];
      const ComplexMatrix expected = (a == b) ? projectors[a]
                                              : ComplexMatrix::Zero(SixTwoCode::kDim,
                                                                    SixTwoCode::kDim);
      worst_orth = std::max(worst_orth, (product - expected).cwiseAbs().maxCoeff());
    }
  add_bound(rep, "A8", "[6,2] projector idempotence and orthogonality", worst_orth, 1e-12);

  const FourOneBlock& block = FourOneLocalCode::instance().block();
  ComplexMatrix kraus_sum = ComplexMatrix::Zero(FourOneBlock::kDim, FourOneBlock::kDim);
  for (const ComplexMatrix& op : block.kraus_to_logical()) kraus_sum += op.adjoint() * op;
  add_bound(rep, "A8", "[4,1] block Kraus completeness",
            (kraus_sum - ComplexMatrix::Identity(FourOneBlock::kDim, FourOneBlock::kDim))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ClaimCheck& c) { return c.pass; });
}

int VerifyReport::failure_count() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const ClaimCheck& c) { return !c.pass; }));
}

VerifyReport run_verification() {
  VerifyReport rep;
  check_closed_forms(rep);
  check_series(rep, CodeKind::nonlocal62, "A2", 0.01);
  check_series(rep, CodeKind::local41, "A3", 0.02);
  check_psi_xi_symmetry(rep);
  check_thresholds(rep);
  check_code_induced_death(rep);
  check_exact_correction(rep);
  check_structure(rep);
  return rep;
}

void print_report(const VerifyReport& report, std::ostream& os) {
  std::map<std::string, std::pair<int, int>> by_criterion;  // criterion -> {pass, fail}
  for (const ClaimCheck& check : report.checks) {
    auto& tally = by_criterion[check.criterion];
    ++(check.pass ? tally.first : tally.second);
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %s  %s  measured=%.12g expected=%.12g tol=%.3g",
                  check.pass ? "PASS" : "FAIL", check.criterion.c_str(), check.name.c_str(),
                  check.measured, check.expected, check.tolerance);
    os << line << '\n';
  }
  os << '\n';
  for (const auto& [criterion, tally] : by_criterion) {
    os << criterion << ": " << (tally.second == 0 ? "PASS" : "FAIL") << " (" << tally.first
       << " of " << (tally.first + tally.second) << " checks)\n";
  }
  os << '\n'
     << (report.all_pass() ? "VERIFICATION PASSED" : "VERIFICATION FAILED") << " ("
     << report.checks.size() << " checks, " << report.failure_count() << " failures)\n";
}

}  // namespace esdqec
