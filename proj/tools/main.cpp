#include "esdqec/measures.hpp"
#include "esdqec/states.hpp"
#include "esdqec/sweep.hpp"
#include "esdqec/verify.hpp"
#include "esdqec/version.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>

namespace {

using esdqec::CodeKind;
using esdqec::Family;

const std::map<std::string, Family> kFamilyNames{{"phi", Family::phi},
                                                 {"psi", Family::psi},
                                                 {"zeta", Family::zeta},
                                                 {"xi", Family::xi}};
const std::map<std::string, CodeKind> kCodeNames{{"none", CodeKind::none},
                                                 {"local41", CodeKind::local41},
                                                 {"nonlocal62", CodeKind::nonlocal62}};

struct SweepOptions {
  esdqec::SweepConfig config;
  std::string out;
  std::string format = "csv";
};

void emit_sweep(const esdqec::SweepResult& result, const std::string& out,
                const std::string& format) {
  const auto write = [&](std::ostream& os) {
    if (format == "json")
      esdqec::write_json(result, os);
    else
      esdqec::write_csv(result, os);
  };
  if (out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(out);
  if (!file) throw CLI::RuntimeError("cannot open output file: " + out, 1);
  write(file);
}

void add_state_options(CLI::App* cmd, esdqec::SweepConfig& config) {
  cmd->add_option("--family", config.family, "State family: phi, psi, zeta or xi")
      ->transform(CLI::CheckedTransformer(kFamilyNames, CLI::ignore_case))
      ->default_str("phi");
  cmd->add_option("--alpha", config.alpha, "Mixing angle in radians")->capture_default_str();
  cmd->add_option("--beta", config.beta, "Relative phase in radians")->capture_default_str();
  cmd->add_option("--code", config.code,
                  "Error correction: none, local41 (two [4,1] blocks) or nonlocal62 ([6,2])")
      ->transform(CLI::CheckedTransformer(kCodeNames, CLI::ignore_case))
      ->default_str("none");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit amplitude damping with and without quantum error correction"};
  app.set_version_flag("--version", std::string(esdqec::kToolVersion));
  app.set_config("--config", "", "Read options from a key=value file (flags take precedence)");
  app.require_subcommand(1);

  SweepOptions sweep_opts;
  sweep_opts.config.alpha = std::numbers::pi / 4.0;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sample fidelity and concurrence of the decoded state over a damping grid");
  add_state_options(sweep, sweep_opts.config);
  sweep->add_option("--gamma-min", sweep_opts.config.gamma_min, "Smallest damping probability")
      ->capture_default_str();
  sweep->add_option("--gamma-max", sweep_opts.config.gamma_max, "Largest damping probability")
      ->capture_default_str();
  sweep->add_option("--gamma-steps", sweep_opts.config.gamma_steps, "Number of grid points")
      ->capture_default_str();
  sweep->add_option("--out", sweep_opts.out, "Output file (stdout when omitted)");
  sweep->add_option("--format", sweep_opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->callback([&] {
    esdqec::validate(sweep_opts.config);
    emit_sweep(esdqec::run_sweep(sweep_opts.config), sweep_opts.out, sweep_opts.format);
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the deterministic verification battery and report every check");
  verify->callback([&] {
    const esdqec::VerifyReport report = esdqec::run_verification();
    esdqec::print_report(report, std::cout);
    if (!report.all_pass()) throw CLI::RuntimeError("verification failed", 1);
  });

  esdqec::SweepConfig threshold_config;
  threshold_config.alpha = std::numbers::pi / 4.0;
  double threshold_tol = 1e-6;
  CLI::App* threshold = app.add_subcommand(
      "esd-threshold", "Locate the damping value where the decoded state loses all entanglement");
  add_state_options(threshold, threshold_config);
  threshold->add_option("--tol", threshold_tol, "Bisection tolerance on gamma")
      ->capture_default_str();
  threshold->callback([&] {
    const esdqec::Pipeline pipeline(threshold_config.family, threshold_config.alpha,
                                    threshold_config.beta, threshold_config.code);
    const double gamma_star = esdqec::esd_threshold(
        [&](double g) { return pipeline.concurrence_at(g); }, threshold_tol);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", gamma_star);
    std::cout << buf << '\n';
  });

  std::string figures_dir = "data/figures";
  int figures_steps = 201;
  CLI::App* figures = app.add_subcommand(
      "figures", "Emit the standard set of sweep CSVs (4 families x 3 codes x 2 alphas)");
  figures->add_option("--out-dir", figures_dir, "Directory for the CSV files")
      ->capture_default_str();
  figures->add_option("--gamma-steps", figures_steps, "Grid points per sweep")
      ->capture_default_str();
  figures->callback([&] {
    std::filesystem::create_directories(figures_dir);
    const std::map<std::string, double> alphas{{"pi6", std::numbers::pi / 6.0},
                                               {"pi4", std::numbers::pi / 4.0}};
    for (const auto& [tag, alpha] : alphas)
      for (Family family : {Family::phi, Family::psi, Family::zeta, Family::xi})
        for (CodeKind code : {CodeKind::none, CodeKind::local41, CodeKind::nonlocal62}) {
          esdqec::SweepConfig config;
          config.family = family;
          config.alpha = alpha;
          config.code = code;
          config.gamma_steps = figures_steps;
          const std::string path = figures_dir + "/" + esdqec::to_string(family) + "_" +
                                   esdqec::to_string(code) + "_alpha_" + tag + ".csv";
          std::ofstream file(path);
          if (!file) throw CLI::RuntimeError("cannot open output file: " + path, 1);
          esdqec::write_csv(esdqec::run_sweep(config), file);
          std::cout << "wrote " << path << '\n';
        }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
