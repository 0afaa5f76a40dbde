#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using casimir::cli::Overrides;

  CLI::App app{"Casimir-Lifshitz free energies, pressures and atom-surface energies"};
  app.require_subcommand(1);

  std::string run_path;
  Overrides ov;
  double gap = 0, temperature = 0, rel_tol = 0;
  int max_n = 0;
  unsigned threads = 0;
  std::string model, polarization, output, format;

  CLI::App* run = app.add_subcommand("run", "evaluate a run configuration");
  run->add_option("config", run_path, "run configuration (JSON)")->required();
  auto* o_gap = run->add_option("--gap", gap, "plate separation in m");
  auto* o_t = run->add_option("--temperature", temperature, "temperature in K");
  auto* o_model = run->add_option("--model", model, "drift|bare|drude-additive|quasi-static");
  auto* o_pol = run->add_option("--polarization", polarization, "tm|te|both")
                    ->check(CLI::IsMember({"tm", "te", "both"}));
  auto* o_tol = run->add_option("--rel-tol", rel_tol, "Matsubara tail tolerance");
  auto* o_max = run->add_option("--max-n", max_n, "cap on Matsubara terms");
  auto* o_out = run->add_option("--output", output, "output path, - for stdout");
  auto* o_fmt =
      run->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  auto* o_thr = run->add_option("--threads", threads, "worker threads");

  std::string validate_path;
  CLI::App* val = app.add_subcommand("validate", "check a configuration without running it");
  val->add_option("config", validate_path, "run configuration (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : casimir::cli::kSchemaError;
  }

  if (*val) return casimir::cli::print_validation(validate_path, std::cout);

  if (*o_gap) ov.gap = gap;
  if (*o_t) ov.temperature = temperature;
  if (*o_model) ov.model = model;
  if (*o_pol) ov.polarization = polarization;
  if (*o_tol) ov.rel_tol = rel_tol;
  if (*o_max) ov.max_n = max_n;
  if (*o_out) ov.output = output;
  if (*o_fmt) ov.format = format;
  if (*o_thr) ov.threads = threads;
  return casimir::cli::run(run_path, ov, std::cout, std::cerr);
}
