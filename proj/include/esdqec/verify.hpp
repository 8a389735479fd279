#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace esdqec {

/// One verified quantity: what was measured, what it should be, how close it
/// has to get, and whether it did. `criterion` groups related checks (A1..A8).
struct ClaimCheck {
  std::string criterion;
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<ClaimCheck> checks;
  bool all_pass() const;
  int failure_count() const;
};

/// Deterministic verification battery: closed-form fidelities, small-damping
/// series coefficients for both codes, the psi/xi fidelity symmetry,
/// disentanglement thresholds with and without coding, exact single-jump
/// correction, and channel/structure invariants. Fixed seeds, no wall-clock
/// dependence.
VerifyReport run_verification();

/// One line per check plus a per-criterion summary and an overall verdict.
void print_report(const VerifyReport& report, std::ostream& os);

}  // namespace esdqec
