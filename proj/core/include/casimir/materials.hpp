#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace casimir {

/// Single-oscillator fit of the bare (carrier-free) permittivity on the
/// imaginary frequency axis:
///   eps(i xi) = eps_inf + omega0^2 (eps_static - eps_inf) / (xi^2 + omega0^2)
struct SellmeierModel {
  double eps_static = 1.0;
  double eps_inf = 1.0;
  double omega0 = 1.0; // rad/s

  void validate() const;
};

/// Intrinsic carrier statistics. The density of drifting charge is
///   n0(T) = doubling_factor * sqrt(nc(T) nv(T)) exp(-Eg / 2 kB T),
/// with the band-edge densities of states scaling as (T/T_ref)^density_exponent.
struct CarrierModel {
  double nc_prefactor = 0.0;            // m^-3 at reference_temperature
  double nv_prefactor = 0.0;            // m^-3 at reference_temperature
  double band_gap = 0.0;                // J
  double density_exponent = 1.5;
  double reference_temperature = 300.0; // K
  double doubling_factor = 2.0;         // electrons and holes treated alike

  void validate() const;
};

/// Effective mass plus a tabulated carrier relaxation time tau(T).
/// tau is interpolated monotonically inside the table, held at the first
/// entry below it, and undefined above it.
class TransportModel {
public:
  using TableEntry = std::pair<double, double>; // (T [K], tau [s])

  TransportModel();
  TransportModel(double effective_mass, std::vector<TableEntry> tau_table);

  double effective_mass() const noexcept { return effective_mass_; }
  std::span<const TableEntry> tau_table() const noexcept { return table_; }
  double max_temperature() const noexcept { return table_.back().first; }

  /// Throws DomainError for T above the table.
  double relaxation_time(double T) const;

private:
  struct Interpolant;

  double effective_mass_;
  std::vector<TableEntry> table_;
  std::shared_ptr<const Interpolant> interp_;
};

struct MaterialSpec {
  std::string name;
  SellmeierModel permittivity;
  CarrierModel carriers;
  TransportModel transport;

  void validate() const;
};

/// Carrier and transport quantities at one temperature and imaginary
/// frequency xi. Everything is real and nonnegative on the imaginary axis.
struct TransportState {
  double n0 = 0.0;              // m^-3
  double sigma0 = 0.0;          // S/m, dc conductivity e^2 n0 tau / m
  double mobility = 0.0;        // m^2/(V s)
  double diffusion = 0.0;       // m^2/s, v_T^2 tau
  double v_thermal = 0.0;       // m/s
  double omega_c = 0.0;         // rad/s, sigma0 / (eps(i xi) eps_vac)
  double omega_c_tilde = 0.0;   // omega_c / (1 + xi tau)
  double diffusion_tilde = 0.0; // diffusion / (1 + xi tau)
  double kappa = 0.0;           // m^-1, inverse Debye radius

  // evaluation context
  double xi = 0.0;
  double temperature = 0.0;
  double tau = 0.0;
  double eps_bare = 1.0;   // eps(i xi)
  double eps_static = 1.0; // eps(0)

  /// ac Drude conductivity sigma0 / (1 + xi tau).
  double sigma() const noexcept { return sigma0 / (1.0 + xi * tau); }
};

double permittivity_bare(const SellmeierModel& model, double xi);

double carrier_density(const CarrierModel& model, double T);

double relaxation_time(const TransportModel& model, double T);

/// Requires T > 0 and xi >= 0. Propagates relaxation_time's DomainError.
TransportState transport_state(const MaterialSpec& mat, double T, double xi);

/// R_D = 1/kappa at temperature T; +inf when there are no carriers.
double debye_length(const MaterialSpec& mat, double T);

} // namespace casimir
