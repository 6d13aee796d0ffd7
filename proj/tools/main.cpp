#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "friedlab/heat_mellin.hpp"
#include "friedlab/scenario_file.hpp"
#include "friedlab/scenario_report.hpp"
#include "friedlab/torsion_calculus.hpp"

namespace {

using namespace friedlab;

int do_check(const std::string& path, const std::string& kind_text, std::optional<double> tol,
             std::optional<long> N) {
  const CheckKind kind = parse_check_kind(kind_text);
  const ScenarioFile file = parse_scenario(path);
  const CheckOutcome outcome = run_check(file, kind, {tol, N});
  auto& stream = outcome.exit_code == kExitInputError ? std::cerr : std::cout;
  for (const auto& line : outcome.lines) stream << line << '\n';
  return outcome.exit_code;
}

int do_sweep(const std::string& path, const std::string& out) {
  const ScenarioFile file = parse_scenario(path);
  const auto rows = run_sweep(file, out);
  std::cout << "wrote " << rows.size() << " row(s) to " << out << '\n';
  return kExitPass;
}

int do_oracle_mellin(long n, double sigma, double h) {
  MellinConfig config;
  config.h = h;
  const MellinDiagnostics d = mellin_torsion_diagnostics(line_model(n), sigma, config);
  const double closed = circle_factor_torsion(n, sigma).real();
  std::printf("mellin_torsion   %.15g\n", d.torsion);
  std::printf("closed_form      %.15g\n", closed);
  std::printf("abs_difference   %.3e\n", std::abs(d.torsion - closed));
  std::printf("derivative_s0    %.15g\n", d.derivative);
  std::printf("quadrature_error %.3e\n", d.quadrature_error);
  std::printf("tail_error       %.3e\n", d.tail_error);
  std::printf("t_max            %.6g\n", d.t_max);
  if (!d.accurate) {
    std::fprintf(stderr, "quadrature error estimate exceeds %.0e\n", kMellinAccuracy);
    return kExitFail;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Ruelle zeta and analytic torsion for suspension flows"};
  app.require_subcommand(1);

  std::string file;
  std::string kind;
  std::optional<double> tol;
  std::optional<long> N;
  auto* check = app.add_subcommand("check", "Run one verification check on a scenario file");
  check->add_option("file", file, "Scenario JSON file")->required();
  check->add_option("--kind", kind, "fried | atiyah-bott | cutoff | abel | mellin")->required();
  check->add_option("--tol", tol, "Override the file tolerance for this check");
  check->add_option("--N", N, "Override the series truncation");

  std::string out;
  auto* sweep = app.add_subcommand("sweep", "Evaluate the sigma grid and write CSV");
  sweep->add_option("file", file, "Scenario JSON file")->required();
  sweep->add_option("--out", out, "Output CSV path")->required();

  long n = 1;
  double sigma = 1.0;
  double h = MellinConfig{}.h;
  auto* oracle = app.add_subcommand("oracle", "Independent numerical oracles");
  oracle->require_subcommand(1);
  auto* mellin = oracle->add_subcommand("mellin", "Mellin heat-trace torsion on the line model");
  mellin->add_option("--n", n, "Nonzero translation index")->required();
  mellin->add_option("--sigma", sigma, "Positive spectral parameter")->required();
  mellin->add_option("--step", h, "Finite-difference step in s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*check) return do_check(file, kind, tol, N);
    if (*sweep) return do_sweep(file, out);
    if (*mellin) return do_oracle_mellin(n, sigma, h);
  } catch (const AccuracyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
