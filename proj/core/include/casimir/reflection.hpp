#pragma once

#include "casimir/materials.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace casimir {

enum class ModelKind {
  DriftCarrier,    // Boltzmann drift/diffusion of carriers, screened TM response
  IdealDielectric, // bare permittivity only
  DrudeAdditive,   // bare permittivity plus a conduction term sigma/(eps_vac xi)
  QuasiStatic,     // Debye-screened static TM term, bare dielectric at xi > 0
  PerfectMirror,   // r_TM = 1, r_TE = -1
};

/// How the DrudeAdditive conduction term is formed.
enum class DrudeTerm {
  ac, // sigma0 / (eps_vac xi (1 + xi tau))
  dc, // sigma0 / (eps_vac xi)
};

struct ReflectionModel {
  ModelKind kind = ModelKind::DriftCarrier;
  DrudeTerm drude_term = DrudeTerm::ac;

  static constexpr ReflectionModel drift() { return {ModelKind::DriftCarrier}; }
  static constexpr ReflectionModel ideal_dielectric() { return {ModelKind::IdealDielectric}; }
  static constexpr ReflectionModel drude(DrudeTerm term = DrudeTerm::ac) {
    return {ModelKind::DrudeAdditive, term};
  }
  static constexpr ReflectionModel quasi_static() { return {ModelKind::QuasiStatic}; }
  static constexpr ReflectionModel perfect_mirror() { return {ModelKind::PerfectMirror}; }

  friend bool operator==(const ReflectionModel&, const ReflectionModel&) = default;
};

/// CLI spelling: drift | bare | drude-additive | drude-additive-dc |
/// quasi-static | perfect-mirror.
std::string to_string(const ReflectionModel& model);
std::optional<ReflectionModel> parse_reflection_model(std::string_view name);

/// xi_n = 2 pi n kB T / hbar.
double matsubara_frequency(int n, double T);

/// One evaluation site on the imaginary frequency axis. Off-lattice
/// frequencies carry n = -1.
struct SpectralPoint {
  int n = 0;
  double xi = 0.0; // rad/s
  double k = 0.0;  // m^-1
  double T = 0.0;  // K

  static SpectralPoint matsubara(int n, double k, double T);
  static SpectralPoint at_frequency(double xi, double k, double T);
};

/// Transverse/longitudinal decay constants inside the medium and the TM
/// auxiliary chi, all real on the imaginary axis. The *_excess members hold
/// eta^2 - k^2 computed without cancellation.
struct DispersionPair {
  double eta_T_sq = 0.0;
  double eta_L_sq = 0.0;
  double K3 = 0.0;
  double chi = 0.0;
  double eta_T_excess = 0.0;
  double eta_L_excess = 0.0;
};

/// Dispersion relations at xi > 0 from an already evaluated transport
/// state. Throws QuasiStaticLimitRequired when state.xi == 0.
DispersionPair dispersion(const TransportState& state, double k);
DispersionPair dispersion(const MaterialSpec& mat, const SpectralPoint& pt);

/// Reflection amplitudes of one half-space at a fixed (xi, T) for any k.
/// Construction evaluates the transport state once; r_tm/r_te are cheap.
/// At xi == 0 each model uses its analytic zero-frequency limit.
class SurfaceResponse {
public:
  SurfaceResponse(const MaterialSpec& mat, ReflectionModel model, double xi, double T);

  double r_tm(double k) const;
  double r_te(double k) const;

  const TransportState& state() const noexcept { return state_; }
  ReflectionModel model() const noexcept { return model_; }

private:
  // Conduction contribution sigma/(eps_vac xi) added to eps in eta_T^2.
  double conduction_term() const;

  ReflectionModel model_;
  TransportState state_;
};

double r_tm(ReflectionModel model, const MaterialSpec& mat, const SpectralPoint& pt);
double r_te(ReflectionModel model, const MaterialSpec& mat, const SpectralPoint& pt);

/// Plain Fresnel amplitudes on the imaginary axis for a local permittivity
/// eps = eps_bare + extra (extra is kept separate so that callers adding a
/// conduction term round identically).
double fresnel_tm(double eps_bare, double extra, double xi, double k);
double fresnel_te(double eps_bare, double extra, double xi, double k);

/// Independent TM check: builds the two-mode (transverse + longitudinal)
/// field inside the drifting-carrier medium, imposes continuity of E_x, H_y
/// and eps*E_z against an incident-plus-reflected vacuum wave, and solves
/// the 3x3 system for the reflection amplitude. Requires xi > 0.
/// Throws DegeneracyError when the matching matrix is singular.
double r_tm_bvp_oracle(const MaterialSpec& mat, const SpectralPoint& pt);

} // namespace casimir
