#include "cli.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/material_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace casimir::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kProvenance = "casimir-lifshitz 0.3.0";

[[noreturn]] void schema_error(const std::string& what) { throw ParameterError("config: " + what); }

double number(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number()) schema_error("'" + key + "' must be a number");
  return v.get<double>();
}

std::string string_value(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_string()) schema_error("'" + key + "' must be a string");
  return v.get<std::string>();
}

ReflectionModel model_value(const std::string& name) {
  auto m = parse_reflection_model(name);
  if (!m) schema_error("unknown model '" + name + "'");
  return *m;
}

Polarization polarization_value(const std::string& name) {
  if (name == "tm") return Polarization::TM;
  if (name == "te") return Polarization::TE;
  if (name == "both") return Polarization::Both;
  schema_error("unknown polarization '" + name + "'");
}

std::vector<double> double_grid(const json& g, const std::string& name) {
  std::vector<double> out;
  if (g.is_array()) {
    for (const json& v : g) {
      if (!v.is_number()) schema_error("grid '" + name + "' must hold numbers");
      out.push_back(v.get<double>());
    }
  } else if (g.is_object()) {
    for (const char* key : {"start", "stop", "count"})
      if (!g.contains(key)) schema_error("grid '" + name + "' needs start, stop and count");
    const double start = number(g, "start");
    const double stop = number(g, "stop");
    const json& cj = g.at("count");
    if (!cj.is_number_integer() || cj.get<long>() < 1)
      schema_error("grid '" + name + "': count must be a positive integer");
    const int count = cj.get<int>();
    const std::string spacing = g.contains("spacing") ? string_value(g, "spacing") : "linear";
    if (spacing != "linear" && spacing != "log")
      schema_error("grid '" + name + "': spacing must be 'linear' or 'log'");
    if (spacing == "log" && !(start > 0.0 && stop > 0.0))
      schema_error("grid '" + name + "': log spacing needs positive bounds");
    for (int i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      out.push_back(spacing == "log" ? start * std::pow(stop / start, f)
                                     : start + f * (stop - start));
    }
    if (count > 1) out.back() = stop;
  } else {
    schema_error("grid '" + name + "' must be an array or a {start, stop, count} object");
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!(out[i] > out[i - 1])) schema_error("grid '" + name + "' must be strictly increasing");
  if (out.empty()) schema_error("grid '" + name + "' is empty");
  return out;
}

std::vector<int> int_grid(const json& g, const std::string& name) {
  std::vector<int> out;
  if (g.is_array()) {
    for (const json& v : g) {
      if (!v.is_number_integer()) schema_error("grid '" + name + "' must hold integers");
      out.push_back(v.get<int>());
    }
  } else if (g.is_object()) {
    if (!g.contains("start") || !g.contains("stop"))
      schema_error("grid '" + name + "' needs start and stop");
    const int start = g.at("start").get<int>();
    const int stop = g.at("stop").get<int>();
    const int step = g.contains("step") ? g.at("step").get<int>() : 1;
    if (step < 1) schema_error("grid '" + name + "': step must be >= 1");
    for (int n = start; n <= stop; n += step) out.push_back(n);
  } else {
    schema_error("grid '" + name + "' must be an array or a {start, stop} object");
  }
  if (out.empty()) schema_error("grid '" + name + "' is empty");
  if (out.front() < 0) schema_error("grid '" + name + "' must be nonnegative");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!(out[i] > out[i - 1])) schema_error("grid '" + name + "' must be strictly increasing");
  return out;
}

void apply_policy(SummationPolicy& p, const json& j) {
  static const std::set<std::string> keys{"rel_tol",           "abs_floor",
                                          "max_matsubara",     "quadrature_rel_tol",
                                          "truncation_safety", "derivative_rel_tol",
                                          "threads"};
  if (!j.is_object()) schema_error("'policy' must be an object");
  for (const auto& [key, _] : j.items())
    if (!keys.count(key)) schema_error("unknown policy key '" + key + "'");
  if (j.contains("rel_tol")) p.rel_tol = number(j, "rel_tol");
  if (j.contains("abs_floor")) p.abs_floor = number(j, "abs_floor");
  if (j.contains("max_matsubara")) p.max_matsubara = j.at("max_matsubara").get<int>();
  if (j.contains("quadrature_rel_tol")) p.quadrature_rel_tol = number(j, "quadrature_rel_tol");
  if (j.contains("truncation_safety")) p.truncation_safety = number(j, "truncation_safety");
  if (j.contains("derivative_rel_tol")) p.derivative_rel_tol = number(j, "derivative_rel_tol");
  if (j.contains("threads")) p.threads = j.at("threads").get<unsigned>();
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("config: cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParameterError("config: '" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path.string() : (base / path).lexically_normal().string();
}

const std::set<std::string> kTopLevelKeys{
    "command",     "comment", "material_1",   "material_2",   "model", "model_1",
    "model_2",     "model_a", "model_b",      "gap",          "temperature",
    "temperatures", "polarization", "atom",    "grids",        "entropy_step",
    "policy",      "output"};

bool needs_d(Command c) { return c == Command::RatioScan; }

} // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "pressure") return Command::Pressure;
  if (name == "free-energy") return Command::FreeEnergy;
  if (name == "entropy") return Command::Entropy;
  if (name == "cp-energy") return Command::CpEnergy;
  if (name == "ratio-scan") return Command::RatioScan;
  if (name == "g-surface") return Command::GSurface;
  if (name == "reflection-dump") return Command::ReflectionDump;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
  case Command::Pressure: return "pressure";
  case Command::FreeEnergy: return "free-energy";
  case Command::Entropy: return "entropy";
  case Command::CpEnergy: return "cp-energy";
  case Command::RatioScan: return "ratio-scan";
  case Command::GSurface: return "g-surface";
  case Command::ReflectionDump: return "reflection-dump";
  }
  return "unknown";
}

json RunConfig::echo() const {
  json j = {{"command", to_string(command)},
            {"material_1", {{"path", material_1_path},
                            {"name", plates.material_1.name},
                            {"fingerprint", material_fingerprint(plates.material_1)}}},
            {"material_2", {{"path", material_2_path},
                            {"name", plates.material_2.name},
                            {"fingerprint", material_fingerprint(plates.material_2)}}},
            {"model_1", casimir::to_string(plates.model_1)},
            {"model_2", casimir::to_string(plates.model_2)},
            {"gap_m", plates.gap},
            {"temperature_K", plates.temperature},
            {"polarization", casimir::to_string(polarization)},
            {"policy", policy_to_json(policy)}};
  if (command == Command::RatioScan) {
    j["model_a"] = casimir::to_string(model_a);
    j["model_b"] = casimir::to_string(model_b);
  }
  if (command == Command::CpEnergy)
    j["atom"] = {{"alpha0_C_m2_per_V", atom_alpha0}, {"omega_a_rad_per_s", atom_omega_a}};
  if (command == Command::Entropy) j["entropy_step_K"] = entropy_step;
  json grids = json::object();
  if (!d_grid.empty()) grids["d_m"] = d_grid;
  if (!t_grid.empty()) grids["T_K"] = t_grid;
  if (!n_grid.empty()) grids["n"] = n_grid;
  if (!k_grid.empty()) grids["k_per_m"] = k_grid;
  if (!xi_grid.empty()) grids["xi_rad_per_s"] = xi_grid;
  if (!temperatures.empty()) grids["temperatures_K"] = temperatures;
  j["grids"] = grids;
  return j;
}

RunConfig load_run_config(const fs::path& config_path, const Overrides& ov) {
  const json doc = read_json(config_path);
  if (!doc.is_object()) schema_error("document must be an object");
  for (const auto& [key, _] : doc.items())
    if (!kTopLevelKeys.count(key)) schema_error("unknown key '" + key + "'");

  RunConfig cfg;
  cfg.config_path = config_path;
  const fs::path base = config_path.parent_path();

  if (!doc.contains("command")) schema_error("missing 'command'");
  auto cmd = parse_command(string_value(doc, "command"));
  if (!cmd) schema_error("unknown command '" + doc.at("command").get<std::string>() + "'");
  cfg.command = *cmd;

  if (!doc.contains("material_1")) schema_error("missing 'material_1'");
  cfg.material_1_path = resolve(base, string_value(doc, "material_1"));
  cfg.material_2_path = doc.contains("material_2") ? resolve(base, string_value(doc, "material_2"))
                                                   : cfg.material_1_path;
  cfg.plates.material_1 = load_material(cfg.material_1_path);
  cfg.plates.material_2 = cfg.material_2_path == cfg.material_1_path
                              ? cfg.plates.material_1
                              : load_material(cfg.material_2_path);

  ReflectionModel shared = ReflectionModel::drift();
  if (doc.contains("model")) shared = model_value(string_value(doc, "model"));
  cfg.plates.model_1 = doc.contains("model_1") ? model_value(string_value(doc, "model_1")) : shared;
  cfg.plates.model_2 = doc.contains("model_2") ? model_value(string_value(doc, "model_2")) : shared;
  if (doc.contains("model_a")) cfg.model_a = model_value(string_value(doc, "model_a"));
  if (doc.contains("model_b")) cfg.model_b = model_value(string_value(doc, "model_b"));

  if (doc.contains("gap")) cfg.plates.gap = number(doc, "gap");
  if (doc.contains("temperature")) cfg.plates.temperature = number(doc, "temperature");
  if (doc.contains("polarization"))
    cfg.polarization = polarization_value(string_value(doc, "polarization"));
  if (doc.contains("entropy_step")) cfg.entropy_step = number(doc, "entropy_step");
  if (doc.contains("temperatures")) cfg.temperatures = double_grid(doc.at("temperatures"), "temperatures");

  if (doc.contains("atom")) {
    const json& atom = doc.at("atom");
    if (!atom.is_object() || !atom.contains("alpha0"))
      schema_error("'atom' must be an object with 'alpha0'");
    cfg.atom_alpha0 = number(atom, "alpha0");
    if (atom.contains("omega_a")) cfg.atom_omega_a = number(atom, "omega_a");
  }

  if (doc.contains("grids")) {
    const json& g = doc.at("grids");
    if (!g.is_object()) schema_error("'grids' must be an object");
    for (const auto& [key, value] : g.items()) {
      if (key == "d") cfg.d_grid = double_grid(value, "d");
      else if (key == "T") cfg.t_grid = double_grid(value, "T");
      else if (key == "n") cfg.n_grid = int_grid(value, "n");
      else if (key == "k") cfg.k_grid = double_grid(value, "k");
      else if (key == "xi") cfg.xi_grid = double_grid(value, "xi");
      else schema_error("unknown grid '" + key + "'");
    }
  }

  if (doc.contains("policy")) apply_policy(cfg.policy, doc.at("policy"));

  if (doc.contains("output")) {
    const json& o = doc.at("output");
    if (!o.is_object()) schema_error("'output' must be an object");
    if (o.contains("path")) cfg.output_path = resolve(fs::current_path(), string_value(o, "path"));
    if (o.contains("format")) cfg.format = string_value(o, "format");
  }

  // command-line overrides
  if (ov.gap) {
    cfg.plates.gap = *ov.gap;
    cfg.d_grid = needs_d(cfg.command) ? std::vector<double>{*ov.gap} : std::vector<double>{};
  }
  if (ov.temperature) {
    cfg.plates.temperature = *ov.temperature;
    cfg.t_grid.clear();
    if (!cfg.temperatures.empty()) cfg.temperatures = {*ov.temperature};
  }
  if (ov.model) {
    const ReflectionModel m = model_value(*ov.model);
    if (cfg.command == Command::RatioScan) {
      cfg.model_a = m;
    } else {
      cfg.plates.model_1 = m;
      cfg.plates.model_2 = m;
    }
  }
  if (ov.polarization) cfg.polarization = polarization_value(*ov.polarization);
  if (ov.rel_tol) cfg.policy.rel_tol = *ov.rel_tol;
  if (ov.max_n) cfg.policy.max_matsubara = *ov.max_n;
  if (ov.threads) cfg.policy.threads = *ov.threads;
  if (ov.output) cfg.output_path = *ov.output == "-" ? "-" : resolve(fs::current_path(), *ov.output);
  if (ov.format) cfg.format = *ov.format;

  // semantic checks
  if (cfg.format != "csv" && cfg.format != "json") schema_error("format must be 'csv' or 'json'");
  if (!(cfg.plates.gap > 0.0)) schema_error("gap must be > 0");
  if (!(cfg.plates.temperature > 0.0)) schema_error("temperature must be > 0");
  for (double d : cfg.d_grid)
    if (!(d > 0.0)) schema_error("grid 'd' must be positive");
  for (double t : cfg.t_grid)
    if (!(t > 0.0)) schema_error("grid 'T' must be positive");
  for (double t : cfg.temperatures)
    if (!(t > 0.0)) schema_error("'temperatures' must be positive");
  for (double k : cfg.k_grid)
    if (!(k > 0.0)) schema_error("grid 'k' must be positive");
  for (double xi : cfg.xi_grid)
    if (!(xi >= 0.0)) schema_error("grid 'xi' must be nonnegative");
  cfg.policy.validate();

  switch (cfg.command) {
  case Command::RatioScan:
    if (cfg.d_grid.empty()) schema_error("ratio-scan needs grids.d");
    break;
  case Command::GSurface:
    if (cfg.k_grid.empty()) schema_error("g-surface needs grids.k");
    if (cfg.n_grid.empty() == cfg.xi_grid.empty())
      schema_error("g-surface needs exactly one of grids.n or grids.xi");
    break;
  case Command::ReflectionDump:
    if (cfg.k_grid.empty() || cfg.n_grid.empty())
      schema_error("reflection-dump needs grids.n and grids.k");
    break;
  case Command::CpEnergy:
    if (!(cfg.atom_alpha0 > 0.0)) schema_error("cp-energy needs atom.alpha0 > 0");
    break;
  default: break;
  }

  if (cfg.output_path.empty())
    cfg.output_path = (fs::current_path() / (to_string(cfg.command) + "." + cfg.format)).string();
  return cfg;
}

namespace {

struct Artifact {
  ScanResult table;
  bool scalar = false;
  std::string quantity; // unit-suffixed column name
  std::string unit;
  SeriesResult value;
  std::string summary;
};

using Eval = std::function<SeriesResult(double)>;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void series(Artifact& a, const std::string& quantity, const std::string& unit,
            const std::string& axis, const std::string& axis_unit,
            const std::vector<double>& grid, double single, const Eval& eval) {
  a.quantity = quantity;
  a.unit = unit;
  if (grid.empty()) {
    a.scalar = true;
    a.value = eval(single);
    a.summary = quantity + " = " + fmt(a.value.value) + " (tail bound " + fmt(a.value.tail_bound) +
                ", " + std::to_string(a.value.terms) + " Matsubara terms)";
    return;
  }
  ScanResult& t = a.table;
  t.axes.push_back({axis, axis_unit, grid});
  t.columns = {{axis, axis_unit}, {quantity, unit}, {"tail_bound", unit}, {"matsubara_terms", "1"}};
  double worst = 0.0;
  for (double x : grid) {
    const SeriesResult r = eval(x);
    t.rows.push_back({x, r.value, r.tail_bound, static_cast<double>(r.terms)});
    if (r.value != 0.0) worst = std::max(worst, std::abs(r.tail_bound / r.value));
  }
  a.summary = quantity + ": " + std::to_string(grid.size()) + " points, worst relative tail bound " +
              fmt(worst);
}

Artifact compute(const RunConfig& cfg) {
  Artifact a;
  const SummationPolicy& policy = cfg.policy;
  const Polarization pol = cfg.polarization;

  switch (cfg.command) {
  case Command::Pressure:
    series(a, "pressure_Pa", "Pa", "d_m", "m", cfg.d_grid, cfg.plates.gap, [&](double d) {
      HalfSpaceConfig c = cfg.plates;
      c.gap = d;
      return pressure(c, policy, pol);
    });
    break;
  case Command::FreeEnergy:
    series(a, "free_energy_J_per_m2", "J/m^2", "d_m", "m", cfg.d_grid, cfg.plates.gap,
           [&](double d) {
             HalfSpaceConfig c = cfg.plates;
             c.gap = d;
             return free_energy_per_area(c, pol, policy);
           });
    break;
  case Command::Entropy:
    series(a, "entropy_J_per_m2_K", "J/(m^2 K)", "T_K", "K", cfg.t_grid, cfg.plates.temperature,
           [&](double T) {
             HalfSpaceConfig c = cfg.plates;
             c.temperature = T;
             return entropy_per_area(c, policy, cfg.entropy_step);
           });
    break;
  case Command::CpEnergy: {
    const Polarizability alpha = oscillator_polarizability(cfg.atom_alpha0, cfg.atom_omega_a);
    series(a, "cp_energy_J", "J", "d_m", "m", cfg.d_grid, cfg.plates.gap, [&](double d) {
      return casimir_polder_energy(alpha, cfg.plates.material_1, cfg.plates.model_1, d,
                                   cfg.plates.temperature, policy);
    });
    break;
  }
  case Command::RatioScan: {
    a.table = ratio_scan(cfg.plates.material_1, cfg.model_a, cfg.model_b, cfg.d_grid,
                         cfg.plates.temperature, policy, pol);
    const auto& rows = a.table.rows;
    a.summary = "ratio " + casimir::to_string(cfg.model_a) + "/" +
                casimir::to_string(cfg.model_b) + ": " + fmt(rows.front()[1]) + " at d = " +
                fmt(rows.front()[0]) + " m .. " + fmt(rows.back()[1]) + " at d = " +
                fmt(rows.back()[0]) + " m";
    break;
  }
  case Command::GSurface: {
    std::vector<double> temps = cfg.temperatures;
    if (temps.empty()) temps = {cfg.plates.temperature};
    ScanResult& out = a.table;
    for (double T : temps) {
      HalfSpaceConfig c = cfg.plates;
      c.temperature = T;
      ScanResult block = cfg.xi_grid.empty()
                             ? g_surface_scan_matsubara(c, cfg.n_grid, cfg.k_grid, policy.threads)
                             : g_surface_scan(c, cfg.xi_grid, cfg.k_grid, policy.threads);
      if (out.columns.empty()) {
        out.axes.push_back({"T_K", "K", temps});
        for (const auto& ax : block.axes) out.axes.push_back(ax);
        out.columns.push_back({"T_K", "K"});
        for (const auto& col : block.columns) out.columns.push_back(col);
      }
      for (auto& row : block.rows) {
        row.insert(row.begin(), T);
        out.rows.push_back(std::move(row));
      }
    }
    a.summary = std::to_string(out.rows.size()) + " points";
    break;
  }
  case Command::ReflectionDump:
    a.table = reflection_dump(cfg.plates.material_1, cfg.plates.model_1, cfg.plates.temperature,
                              cfg.n_grid, cfg.k_grid);
    a.summary = std::to_string(a.table.rows.size()) + " points";
    break;
  }
  return a;
}

json metadata(const RunConfig& cfg) {
  json m = {{"provenance", kProvenance},
            {"config", cfg.echo()},
            {"sign_convention",
             "energies and pressures are negative for attraction; pressure = -d(E/A)/dd"}};
  return m;
}

std::string serialize(const RunConfig& cfg, const Artifact& a) {
  const json meta = metadata(cfg);
  if (a.scalar) {
    if (cfg.format == "json") {
      json j = {{"quantity", a.quantity},
                {"unit", a.unit},
                {"value", a.value.value},
                {"tail_bound", a.value.tail_bound},
                {"matsubara_terms", a.value.terms},
                {"metadata", meta}};
      if (std::isfinite(a.value.tm)) {
        j["tm"] = a.value.tm;
        j["te"] = a.value.te;
      }
      return j.dump(2) + "\n";
    }
    std::string s = "# " + meta.dump() + "\n";
    s += a.quantity + ",tail_bound,matsubara_terms\n";
    s += format_csv_number(a.value.value) + "," + format_csv_number(a.value.tail_bound) + "," +
         std::to_string(a.value.terms) + "\n";
    return s;
  }
  ScanResult t = a.table;
  json merged = meta;
  for (const auto& [key, value] : t.metadata.items())
    if (!merged.contains(key)) merged[key] = value;
  t.metadata = merged;
  t.check_shape();
  if (cfg.format == "json") return t.to_json().dump(2) + "\n";
  return "# " + t.metadata.dump() + "\n" + t.to_csv();
}

void write_artifact(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  // Write to a sibling temp file first so a failed run never leaves a partial artifact.
  const fs::path tmp = p.string() + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ParameterError("cannot write '" + path + "'");
    f << text;
    if (!f) throw ParameterError("cannot write '" + path + "'");
  }
  fs::rename(tmp, p);
}

void error_line(std::ostream& err, const char* kind, const std::string& message, int code,
                const json& extra = json::object()) {
  json j = {{"error", kind}, {"message", message}, {"exit_code", code}};
  for (const auto& [key, value] : extra.items()) j[key] = value;
  err << j.dump() << "\n";
}

} // namespace

int run(const fs::path& config_path, const Overrides& overrides, std::ostream& out,
        std::ostream& err) {
  try {
    const auto start = std::chrono::steady_clock::now();
    const RunConfig cfg = load_run_config(config_path, overrides);
    const Artifact a = compute(cfg);
    write_artifact(cfg.output_path, serialize(cfg, a), out);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // keep stdout clean when the artifact itself goes there
    std::ostream& log = cfg.output_path == "-" ? err : out;
    log << to_string(cfg.command) << ": " << a.summary << " -> " << cfg.output_path << " ["
        << fmt(wall) << " s]\n";
    return kOk;
  } catch (const DegeneracyError& e) {
    error_line(err, "degeneracy", e.what(), kDomainError, {{"k", e.k()}, {"xi", e.xi()}});
    return kDomainError;
  } catch (const DifferentiationError& e) {
    error_line(err, "differentiation", e.what(), kConvergenceError,
               {{"achieved_bound", e.achieved_bound()}});
    return kConvergenceError;
  } catch (const ConvergenceError& e) {
    error_line(err, "convergence", e.what(), kConvergenceError,
               {{"achieved_bound", e.achieved_bound()}});
    return kConvergenceError;
  } catch (const DomainError& e) {
    error_line(err, "domain", e.what(), kDomainError);
    return kDomainError;
  } catch (const ParameterError& e) {
    error_line(err, "schema", e.what(), kSchemaError);
    return kSchemaError;
  } catch (const json::exception& e) {
    error_line(err, "schema", std::string("config: ") + e.what(), kSchemaError);
    return kSchemaError;
  } catch (const std::exception& e) {
    error_line(err, "internal", e.what(), kSchemaError);
    return kSchemaError;
  }
}

ValidationReport validate(const fs::path& config_path) {
  ValidationReport report;
  RunConfig cfg;
  try {
    cfg = load_run_config(config_path);
  } catch (const std::exception& e) {
    report.violations.push_back(e.what());
    return report;
  }

  auto describe = [&](const MaterialSpec& m, const std::string& label) {
    try {
      const double T = 300.0;
      if (T > m.transport.max_temperature()) {
        report.notes.push_back(label + " (" + m.name + "): tau table ends at " +
                               fmt(m.transport.max_temperature()) + " K");
        return;
      }
      const TransportState s = transport_state(m, T, 0.0);
      report.notes.push_back(label + " (" + m.name + ") at 300 K: n0 = " + fmt(s.n0) +
                             " m^-3, sigma0 = " + fmt(s.sigma0) +
                             " S/m, Debye length = " + fmt(debye_length(m, T)) + " m");
      if (s.sigma0 > 1e8)
        report.violations.push_back(label + ": sigma0 = " + fmt(s.sigma0) +
                                    " S/m exceeds any metal; check units");
    } catch (const std::exception& e) {
      report.violations.push_back(label + ": " + e.what());
    }
  };
  describe(cfg.plates.material_1, "material_1");
  if (cfg.material_2_path != cfg.material_1_path) describe(cfg.plates.material_2, "material_2");

  auto check_temperature = [&](double T, const std::string& where) {
    for (const MaterialSpec* m : {&cfg.plates.material_1, &cfg.plates.material_2})
      if (T > m->transport.max_temperature())
        report.violations.push_back(where + " = " + fmt(T) + " K is above the tau table of " +
                                    m->name);
  };
  check_temperature(cfg.plates.temperature, "temperature");
  if (!cfg.t_grid.empty()) check_temperature(cfg.t_grid.back(), "grid T");
  if (!cfg.temperatures.empty()) check_temperature(cfg.temperatures.back(), "temperatures");

  auto check_gap = [&](double d, const std::string& where) {
    if (d < 1e-9) report.violations.push_back(where + " = " + fmt(d) + " m is below 1 nm");
    if (d > 1e-2) report.violations.push_back(where + " = " + fmt(d) + " m is above 1 cm");
  };
  check_gap(cfg.plates.gap, "gap");
  for (double d : cfg.d_grid) check_gap(d, "grid d");

  if (cfg.command == Command::CpEnergy) {
    const double a_gauss = cfg.atom_alpha0 / (4.0 * constants::pi * constants::vacuum_permittivity);
    if (a_gauss > 1e-27)
      report.violations.push_back("atom.alpha0 corresponds to " + fmt(a_gauss) +
                                  " m^3; expected SI units of C m^2/V");
  }
  const int n_est = initial_matsubara_terms(
      cfg.d_grid.empty() ? cfg.plates.gap : cfg.d_grid.front(),
      cfg.t_grid.empty() ? cfg.plates.temperature : cfg.t_grid.front(), cfg.policy);
  report.notes.push_back("initial Matsubara truncation " + std::to_string(n_est) + " terms");
  if (n_est > cfg.policy.max_matsubara)
    report.violations.push_back("initial truncation exceeds policy.max_matsubara");
  return report;
}

int print_validation(const fs::path& config_path, std::ostream& out) {
  const ValidationReport r = validate(config_path);
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  for (const auto& v : r.violations) out << "violation: " << v << "\n";
  out << (r.violations.empty() ? "ok" : std::to_string(r.violations.size()) + " violation(s)")
      << "\n";
  return kOk;
}

} // namespace casimir::cli
