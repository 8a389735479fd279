#pragma once

#include "esdqec/measures.hpp"
#include "esdqec/states.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace esdqec {

/// Error-correction choice for a pipeline: no encoding, two independent
/// [4,1] blocks, or the joint [6,2] code.
enum class CodeKind { none, local41, nonlocal62 };

std::string to_string(CodeKind code);
CodeKind code_from_string(std::string_view name);

struct SweepConfig {
  Family family = Family::phi;
  double alpha = 0.0;
  double beta = 0.0;
  CodeKind code = CodeKind::none;
  double gamma_min = 0.0;
  double gamma_max = 1.0;
  int gamma_steps = 201;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const SweepConfig& config);

/// Evenly spaced damping grid from gamma_min to gamma_max inclusive.
std::vector<double> gamma_grid(const SweepConfig& config);

struct SweepRow {
  double gamma = 0.0;
  double fidelity = 0.0;
  double concurrence = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::string tool_version;
};

/// One family/code choice, evaluated point by point:
/// prepare -> encode -> damp -> recover and decode -> measure.
class Pipeline {
 public:
  Pipeline(Family family, double alpha, double beta, CodeKind code);
  explicit Pipeline(const SweepConfig& config);

  const TwoQubitPure& reference() const { return state_; }
  CodeKind code() const { return code_; }

  /// The decoded two-qubit state after damping at the given gamma.
  DensityOperator logical_state_at(double gamma) const;

  double fidelity_at(double gamma) const;
  double concurrence_at(double gamma) const;
  SweepRow evaluate(double gamma) const;

 private:
  TwoQubitPure state_;
  CodeKind code_;
  StateVector encoded_;
  int n_qubits_;
};

SweepResult run_sweep(const SweepConfig& config);

/// Plain-text table, header "gamma,fidelity,concurrence", 17 significant
/// digits per value so doubles survive a round trip.
void write_csv(const SweepResult& result, std::ostream& os);

/// JSON object with config echo, tool block and row array, in a fixed key
/// order so identical configs produce identical bytes.
void write_json(const SweepResult& result, std::ostream& os);

}  // namespace esdqec
