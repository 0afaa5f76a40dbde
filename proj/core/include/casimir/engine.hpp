#pragma once

#include "casimir/materials.hpp"
#include "casimir/matsubara.hpp"
#include "casimir/reflection.hpp"
#include "casimir/scan_result.hpp"

#include <functional>
#include <span>
#include <string>

namespace casimir {

enum class Polarization { TM, TE, Both };

std::string to_string(Polarization pol);

nlohmann::json policy_to_json(const SummationPolicy& policy);

/// Two half-spaces separated by a vacuum gap.
struct HalfSpaceConfig {
  MaterialSpec material_1;
  MaterialSpec material_2;
  ReflectionModel model_1;
  ReflectionModel model_2;
  double gap = 1e-6;          // m
  double temperature = 300.0; // K

  void validate() const;

  /// Same material and model on both sides.
  static HalfSpaceConfig symmetric(const MaterialSpec& mat, ReflectionModel model, double gap,
                                   double T);
};

/// Lifshitz integrand ln(1 - r1 r2 exp(-2 K3 d)) at one spectral point.
/// Both returns the TM + TE sum.
double g_function(const HalfSpaceConfig& cfg, const SpectralPoint& pt, Polarization pol);

/// Free energy per unit area, J/m^2:
///   E/A = kB T sum'_n int d^2k/(2 pi)^2 g(i xi_n, k).
/// Negative for attraction. The Matsubara truncation is decided on TM+TE
/// together, so the TM and TE parts add up to Both exactly.
SeriesResult free_energy_per_area(const HalfSpaceConfig& cfg, Polarization pol,
                                  const SummationPolicy& policy);

/// Pressure P = -d(E/A)/dd in Pa; negative means attraction. Its magnitude
/// is 2 kB T sum'_n int d^2k/(2 pi)^2 K3 sum_p r1 r2 e^{-2K3d}/(1 - r1 r2 e^{-2K3d}).
SeriesResult pressure(const HalfSpaceConfig& cfg, const SummationPolicy& policy,
                      Polarization pol = Polarization::Both);

/// Entropy per area S = -d(E/A)/dT in J/(m^2 K), by central differences with
/// Richardson step-halving. Every temperature dependence (xi_n, n0, tau,
/// reflection amplitudes) moves with T. initial_step <= 0 selects
/// max(0.01 T, 0.1 K). tail_bound carries the derivative error estimate.
/// Throws DifferentiationError if step-halving does not settle.
SeriesResult entropy_per_area(const HalfSpaceConfig& cfg, const SummationPolicy& policy,
                              double initial_step = 0.0);

/// Ground-state polarizability alpha(i xi) of an atom, SI units C m^2/V.
using Polarizability = std::function<double(double)>;

/// Constant-plus-single-oscillator polarizability alpha0 / (1 + xi^2/omega_a^2);
/// omega_a <= 0 or infinite gives a static alpha0.
Polarizability oscillator_polarizability(double alpha0, double omega_a);

/// Atom-surface Casimir-Polder energy in J (negative = attraction):
///   E = -kB T sum'_n alpha(i xi_n)/(4 pi eps_vac) int_0^inf dk k K3 e^{-2 K3 d}
///       [2 r_TM - (r_TM + r_TE) xi_n^2/(K3^2 c^2)].
/// The prefactor is the dilute limit of the two-plate pressure, checked in
/// the test suite against a plate with eps = 1 + delta.
SeriesResult casimir_polder_energy(const Polarizability& alpha, const MaterialSpec& surface,
                                   ReflectionModel model, double distance, double T,
                                   const SummationPolicy& policy);

/// E_a(d)/E_b(d) for identical plates of `material` over d_grid.
/// Columns: d_m, ratio, tail_bound (relative bound on the ratio),
/// energy_a_J_per_m2, energy_b_J_per_m2.
ScanResult ratio_scan(const MaterialSpec& material, ReflectionModel model_a,
                      ReflectionModel model_b, std::span<const double> d_grid, double T,
                      const SummationPolicy& policy, Polarization pol = Polarization::Both);

/// g^TM and g^TE over a (frequency, k) grid at the configuration's gap and
/// temperature. Columns: xi_rad_per_s, k_per_m, g_tm, g_te.
ScanResult g_surface_scan(const HalfSpaceConfig& cfg, std::span<const double> xi_grid,
                          std::span<const double> k_grid, unsigned threads = 1);

/// Same as above on Matsubara indices; adds a leading n column.
ScanResult g_surface_scan_matsubara(const HalfSpaceConfig& cfg, std::span<const int> n_grid,
                                    std::span<const double> k_grid, unsigned threads = 1);

/// Reflection amplitudes of one half-space over (n, k) at temperature T.
/// Columns: n, xi_rad_per_s, k_per_m, r_tm, r_te.
ScanResult reflection_dump(const MaterialSpec& material, ReflectionModel model, double T,
                           std::span<const int> n_grid, std::span<const double> k_grid);

} // namespace casimir
