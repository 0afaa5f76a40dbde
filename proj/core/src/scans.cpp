#include "casimir/engine.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/material_io.hpp"
#include "casimir/parallel.hpp"

#include <cmath>

namespace casimir {

namespace {

void require_increasing(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw ParameterError(std::string(what) + ": grid must not be empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1]))
      throw ParameterError(std::string(what) + ": grid must be strictly increasing");
  }
}

void require_increasing(std::span<const int> grid, const char* what) {
  if (grid.empty()) throw ParameterError(std::string(what) + ": grid must not be empty");
  if (grid.front() < 0) throw ParameterError(std::string(what) + ": Matsubara indices must be >= 0");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1]))
      throw ParameterError(std::string(what) + ": grid must be strictly increasing");
  }
}

nlohmann::json material_echo(const MaterialSpec& m) {
  return {{"name", m.name}, {"fingerprint", material_fingerprint(m)}};
}

nlohmann::json config_echo(const HalfSpaceConfig& cfg) {
  return {{"material_1", material_echo(cfg.material_1)},
          {"material_2", material_echo(cfg.material_2)},
          {"model_1", to_string(cfg.model_1)},
          {"model_2", to_string(cfg.model_2)},
          {"gap_m", cfg.gap},
          {"temperature_K", cfg.temperature}};
}

} // namespace

ScanResult ratio_scan(const MaterialSpec& material, ReflectionModel model_a,
                      ReflectionModel model_b, std::span<const double> d_grid, double T,
                      const SummationPolicy& policy, Polarization pol) {
  require_increasing(d_grid, "ratio_scan");

  ScanResult out;
  out.axes.push_back({"d_m", "m", {d_grid.begin(), d_grid.end()}});
  out.columns = {{"d_m", "m"},
                 {"ratio", "1"},
                 {"tail_bound", "1"},
                 {"energy_a_J_per_m2", "J/m^2"},
                 {"energy_b_J_per_m2", "J/m^2"}};

  for (double d : d_grid) {
    const auto a = free_energy_per_area(HalfSpaceConfig::symmetric(material, model_a, d, T), pol,
                                        policy);
    const auto b = free_energy_per_area(HalfSpaceConfig::symmetric(material, model_b, d, T), pol,
                                        policy);
    const double ratio = a.value / b.value;
    const double bound =
        std::abs(ratio) * (a.tail_bound / std::abs(a.value) + b.tail_bound / std::abs(b.value));
    out.rows.push_back({d, ratio, bound, a.value, b.value});
  }

  out.metadata = {{"quantity", "free-energy ratio E_a/E_b"},
                  {"material", material_echo(material)},
                  {"model_a", to_string(model_a)},
                  {"model_b", to_string(model_b)},
                  {"temperature_K", T},
                  {"polarization", to_string(pol)},
                  {"policy", policy_to_json(policy)}};
  return out;
}

ScanResult g_surface_scan(const HalfSpaceConfig& cfg, std::span<const double> xi_grid,
                          std::span<const double> k_grid, unsigned threads) {
  cfg.validate();
  require_increasing(xi_grid, "g_surface_scan xi");
  require_increasing(k_grid, "g_surface_scan k");
  if (xi_grid.front() < 0.0) throw ParameterError("g_surface_scan: xi must be >= 0");

  ScanResult out;
  out.axes = {{"xi_rad_per_s", "rad/s", {xi_grid.begin(), xi_grid.end()}},
              {"k_per_m", "1/m", {k_grid.begin(), k_grid.end()}}};
  out.columns = {{"xi_rad_per_s", "rad/s"}, {"k_per_m", "1/m"}, {"g_tm", "1"}, {"g_te", "1"}};
  out.rows.resize(xi_grid.size() * k_grid.size());

  parallel_for(xi_grid.size(), threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < k_grid.size(); ++j) {
      const auto pt = SpectralPoint::at_frequency(xi_grid[i], k_grid[j], cfg.temperature);
      out.rows[i * k_grid.size() + j] = {xi_grid[i], k_grid[j],
                                         g_function(cfg, pt, Polarization::TM),
                                         g_function(cfg, pt, Polarization::TE)};
    }
  });
  out.metadata = {{"quantity", "g = ln(1 - r1 r2 exp(-2 K3 d))"}, {"config", config_echo(cfg)}};
  return out;
}

ScanResult g_surface_scan_matsubara(const HalfSpaceConfig& cfg, std::span<const int> n_grid,
                                    std::span<const double> k_grid, unsigned threads) {
  require_increasing(n_grid, "g_surface_scan n");
  std::vector<double> xi;
  for (int n : n_grid) xi.push_back(matsubara_frequency(n, cfg.temperature));
  if (xi.size() > 1 && !(xi[1] > xi[0]))
    throw ParameterError("g_surface_scan: temperature too low to separate Matsubara frequencies");

  ScanResult base = g_surface_scan(cfg, xi, k_grid, threads);
  ScanResult out;
  out.axes = {{"n", "1", {n_grid.begin(), n_grid.end()}}, base.axes[1]};
  out.columns = {{"n", "1"}};
  out.columns.insert(out.columns.end(), base.columns.begin(), base.columns.end());
  out.rows.reserve(base.rows.size());
  for (std::size_t r = 0; r < base.rows.size(); ++r) {
    std::vector<double> row{static_cast<double>(n_grid[r / k_grid.size()])};
    row.insert(row.end(), base.rows[r].begin(), base.rows[r].end());
    out.rows.push_back(std::move(row));
  }
  out.metadata = base.metadata;
  return out;
}

ScanResult reflection_dump(const MaterialSpec& material, ReflectionModel model, double T,
                           std::span<const int> n_grid, std::span<const double> k_grid) {
  material.validate();
  require_increasing(n_grid, "reflection_dump n");
  require_increasing(k_grid, "reflection_dump k");

  ScanResult out;
  out.axes = {{"n", "1", {n_grid.begin(), n_grid.end()}},
              {"k_per_m", "1/m", {k_grid.begin(), k_grid.end()}}};
  out.columns = {{"n", "1"},
                 {"xi_rad_per_s", "rad/s"},
                 {"k_per_m", "1/m"},
                 {"r_tm", "1"},
                 {"r_te", "1"}};
  for (int n : n_grid) {
    const double xi = matsubara_frequency(n, T);
    const SurfaceResponse s(material, model, xi, T);
    for (double k : k_grid)
      out.rows.push_back({static_cast<double>(n), xi, k, s.r_tm(k), s.r_te(k)});
  }
  out.metadata = {{"quantity", "reflection amplitudes on the imaginary axis"},
                  {"material", material_echo(material)},
                  {"model", to_string(model)},
                  {"temperature_K", T}};
  return out;
}

} // namespace casimir
