#include "esdqec/sweep.hpp"

#include "esdqec/channels.hpp"
#include "esdqec/code41.hpp"
#include "esdqec/code62.hpp"
#include "esdqec/version.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace esdqec {

std::string to_string(CodeKind code) {
  switch (code) {
    case CodeKind::none: return "none";
    case CodeKind::local41: return "local41";
    case CodeKind::nonlocal62: return "nonlocal62";
  }
  throw std::invalid_argument("to_string: unknown code kind");
}

CodeKind code_from_string(std::string_view name) {
  if (name == "none") return CodeKind::none;
  if (name == "local41") return CodeKind::local41;
  if (name == "nonlocal62") return CodeKind::nonlocal62;
  throw std::invalid_argument("code_from_string: expected none, local41 or nonlocal62");
}

void validate(const SweepConfig& config) {
  if (!std::isfinite(config.alpha)) throw std::invalid_argument("invalid config field: alpha");
  if (!std::isfinite(config.beta)) throw std::invalid_argument("invalid config field: beta");
  if (!(config.gamma_min >= 0.0 && config.gamma_min <= 1.0))
    throw std::invalid_argument("invalid config field: gamma_min");
  if (!(config.gamma_max >= 0.0 && config.gamma_max <= 1.0))
    throw std::invalid_argument("invalid config field: gamma_max");
  if (config.gamma_min > config.gamma_max)
    throw std::invalid_argument("invalid config field: gamma_min exceeds gamma_max");
  if (config.gamma_steps < 1) throw std::invalid_argument("invalid config field: gamma_steps");
  if (config.gamma_steps > 1 && !(config.gamma_min < config.gamma_max))
    throw std::invalid_argument("invalid config field: gamma_steps needs gamma_min < gamma_max");
}

std::vector<double> gamma_grid(const SweepConfig& config) {
  validate(config);
  std::vector<double> grid;
  grid.reserve(config.gamma_steps);
  if (config.gamma_steps == 1) {
    grid.push_back(config.gamma_min);
    return grid;
  }
  const double denom = config.gamma_steps - 1;
  for (int i = 0; i < config.gamma_steps; ++i)
    grid.push_back(((denom - i) * config.gamma_min + i * config.gamma_max) / denom);
  return grid;
}

Pipeline::Pipeline(Family family, double alpha, double beta, CodeKind code)
    : state_(make_family_state(family, alpha, beta)), code_(code) {
  switch (code_) {
    case CodeKind::none:
      encoded_ = state_.vector();
      n_qubits_ = 2;
      break;
    case CodeKind::local41:
      encoded_ = FourOneLocalCode::instance().encode(state_);
      n_qubits_ = FourOneLocalCode::kPhysicalQubits;
      break;
    case CodeKind::nonlocal62:
      encoded_ = SixTwoCode::instance().encode(state_);
      n_qubits_ = SixTwoCode::kPhysicalQubits;
      break;
  }
}

Pipeline::Pipeline(const SweepConfig& config)
    : Pipeline(config.family, config.alpha, config.beta, config.code) {}

DensityOperator Pipeline::logical_state_at(double gamma) const {
  DensityOperator damped =
      apply_damping(DensityOperator::from_pure(encoded_), DampingChannel(gamma, n_qubits_));
  switch (code_) {
    case CodeKind::none: return damped;
    case CodeKind::local41:
      return FourOneLocalCode::instance().measure_and_recover(damped).logical_rho;
    case CodeKind::nonlocal62:
      return SixTwoCode::instance().measure_and_recover(damped).logical_rho;
  }
  throw std::logic_error("Pipeline: unknown code kind");
}

double Pipeline::fidelity_at(double gamma) const {
  return fidelity(state_, logical_state_at(gamma));
}

double Pipeline::concurrence_at(double gamma) const {
  return concurrence(logical_state_at(gamma));
}

SweepRow Pipeline::evaluate(double gamma) const {
  const DensityOperator logical = logical_state_at(gamma);
  return SweepRow{gamma, fidelity(state_, logical), concurrence(logical)};
}

SweepResult run_sweep(const SweepConfig& config) {
  const std::vector<double> grid = gamma_grid(config);
  const Pipeline pipeline(config);
  SweepResult result{config, {}, kToolVersion};
  result.rows.reserve(grid.size());
  for (double gamma : grid) result.rows.push_back(pipeline.evaluate(gamma));
  return result;
}

namespace {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(const SweepResult& result, std::ostream& os) {
  os << "gamma,fidelity,concurrence\n";
  for (const SweepRow& row : result.rows)
    os << format_value(row.gamma) << ',' << format_value(row.fidelity) << ','
       << format_value(row.concurrence) << '\n';
}

void write_json(const SweepResult& result, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["config"] = {{"family", to_string(result.config.family)},
                   {"alpha", result.config.alpha},
                   {"beta", result.config.beta},
                   {"code", to_string(result.config.code)},
                   {"gamma_min", result.config.gamma_min},
                   {"gamma_max", result.config.gamma_max},
                   {"gamma_steps", result.config.gamma_steps}};
  doc["tool"] = {{"name", kToolName}, {"version", result.tool_version}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : result.rows)
    rows.push_back({{"gamma", row.gamma},
                    {"fidelity", row.fidelity},
                    {"concurrence", row.concurrence}});
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

}  // namespace esdqec
