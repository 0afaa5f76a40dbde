#pragma once

#include "casimir/engine.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace casimir::cli {

enum ExitCode : int {
  kOk = 0,
  kSchemaError = 1,
  kConvergenceError = 2,
  kDomainError = 3,
};

/// Command-line values that take precedence over the config file.
struct Overrides {
  std::optional<double> gap;
  std::optional<double> temperature;
  std::optional<std::string> model;
  std::optional<std::string> polarization;
  std::optional<double> rel_tol;
  std::optional<int> max_n;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
};

enum class Command { Pressure, FreeEnergy, Entropy, CpEnergy, RatioScan, GSurface, ReflectionDump };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

/// Fully resolved run request: materials loaded, overrides applied.
struct RunConfig {
  Command command = Command::Pressure;
  std::filesystem::path config_path;

  HalfSpaceConfig plates;
  std::string material_1_path;
  std::string material_2_path;
  ReflectionModel model_a = ReflectionModel::drift();
  ReflectionModel model_b = ReflectionModel::ideal_dielectric();
  Polarization polarization = Polarization::Both;

  double atom_alpha0 = 0.0;  // C m^2/V
  double atom_omega_a = 0.0; // rad/s, <= 0 for a static polarizability
  double entropy_step = 0.0; // K, <= 0 for the default

  std::vector<double> d_grid;
  std::vector<double> t_grid;
  std::vector<int> n_grid;
  std::vector<double> k_grid;
  std::vector<double> xi_grid;
  std::vector<double> temperatures; // g-surface: one block per temperature

  SummationPolicy policy;
  std::string output_path; // "-" writes to standard output
  std::string format = "csv";

  /// Effective configuration for output metadata.
  nlohmann::json echo() const;
};

/// Parses and resolves a run configuration. Relative material paths are
/// resolved against the config file's directory. Throws ParameterError on
/// any schema problem (exit code 1).
RunConfig load_run_config(const std::filesystem::path& config_path,
                          const Overrides& overrides = {});

/// Executes a run and writes its artifact. Never throws; maps failures to
/// exit codes and writes one JSON error line to `err`.
int run(const std::filesystem::path& config_path, const Overrides& overrides, std::ostream& out,
        std::ostream& err);

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

/// Schema, unit-plausibility and grid checks without running the engine.
ValidationReport validate(const std::filesystem::path& config_path);

/// Writes the report; always returns kOk.
int print_validation(const std::filesystem::path& config_path, std::ostream& out);

} // namespace casimir::cli
