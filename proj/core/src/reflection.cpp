#include "casimir/reflection.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

#include <cassert>
#include <cmath>

namespace casimir {

using namespace constants;

namespace {

double square(double x) { return x * x; }

// Debye-screened static TM amplitude (eps0 q - k)/(eps0 q + k), written in
// terms of k/q so that k -> 0 with kappa -> 0 stays finite.
double screened_static_tm(double eps_static, double kappa, double k) {
  const double q = std::hypot(k, kappa);
  const double k_over_q = q > 0.0 ? k / q : 1.0;
  return (eps_static - k_over_q) / (eps_static + k_over_q);
}

} // namespace

std::string to_string(const ReflectionModel& model) {
  switch (model.kind) {
  case ModelKind::DriftCarrier: return "drift";
  case ModelKind::IdealDielectric: return "bare";
  case ModelKind::DrudeAdditive:
    return model.drude_term == DrudeTerm::dc ? "drude-additive-dc" : "drude-additive";
  case ModelKind::QuasiStatic: return "quasi-static";
  case ModelKind::PerfectMirror: return "perfect-mirror";
  }
  return "unknown";
}

std::optional<ReflectionModel> parse_reflection_model(std::string_view name) {
  if (name == "drift" || name == "drift-carrier") return ReflectionModel::drift();
  if (name == "bare" || name == "ideal-dielectric") return ReflectionModel::ideal_dielectric();
  if (name == "drude-additive" || name == "drude-additive-ac")
    return ReflectionModel::drude(DrudeTerm::ac);
  if (name == "drude-additive-dc") return ReflectionModel::drude(DrudeTerm::dc);
  if (name == "quasi-static") return ReflectionModel::quasi_static();
  if (name == "perfect-mirror") return ReflectionModel::perfect_mirror();
  return std::nullopt;
}

double matsubara_frequency(int n, double T) {
  return 2.0 * pi * static_cast<double>(n) * boltzmann * T / hbar;
}

SpectralPoint SpectralPoint::matsubara(int n, double k, double T) {
  return {n, matsubara_frequency(n, T), k, T};
}

SpectralPoint SpectralPoint::at_frequency(double xi, double k, double T) {
  return {-1, xi, k, T};
}

DispersionPair dispersion(const TransportState& s, double k) {
  if (!(s.xi > 0.0))
    throw QuasiStaticLimitRequired(
        "dispersion: xi = 0 needs the analytic zero-frequency forms");

  const double k2 = k * k;
  const double a = square(s.xi / speed_of_light);
  const double conduction = s.sigma() / (vacuum_permittivity * s.xi);

  DispersionPair d;
  d.eta_T_excess = (s.eps_bare + conduction) * a;
  d.eta_L_excess = (s.xi + s.omega_c_tilde) / s.diffusion_tilde;
  d.eta_T_sq = k2 + d.eta_T_excess;
  d.eta_L_sq = k2 + d.eta_L_excess;
  d.K3 = std::sqrt(k2 + a);

  // eps >= 1 keeps eta_T^2 > k^2 strictly once xi > 0
  assert(d.eta_T_excess > 0.0);

  const double eta_T = std::sqrt(d.eta_T_sq);
  const double eta_L = std::sqrt(d.eta_L_sq);
  // eta_L eta_T - k^2 without cancellation near xi -> 0
  const double cross = (k2 * (d.eta_L_excess + d.eta_T_excess) +
                        d.eta_L_excess * d.eta_T_excess) /
                       (eta_L * eta_T + k2);
  // eps xi^2/c^2 / (eta_T^2 - k^2); exactly 1 without carriers
  const double bare_fraction = s.eps_bare / (s.eps_bare + conduction);
  d.chi = (k2 + bare_fraction * cross) / eta_L;
  return d;
}

DispersionPair dispersion(const MaterialSpec& mat, const SpectralPoint& pt) {
  return dispersion(transport_state(mat, pt.T, pt.xi), pt.k);
}

double fresnel_tm(double eps_bare, double extra, double xi, double k) {
  const double eps = eps_bare + extra;
  const double k2 = k * k;
  const double a = square(xi / speed_of_light);
  const double K3 = std::sqrt(k2 + a);
  const double eta = std::sqrt(k2 + eps * a);
  // (eps K3 - eta)(eps K3 + eta) = (eps - 1)[(eps + 1) k^2 + eps a]
  const double eps_minus_1 = (eps_bare - 1.0) + extra;
  return eps_minus_1 * ((eps + 1.0) * k2 + eps * a) / square(eps * K3 + eta);
}

double fresnel_te(double eps_bare, double extra, double xi, double k) {
  const double k2 = k * k;
  const double a = square(xi / speed_of_light);
  const double K3 = std::sqrt(k2 + a);
  const double eta = std::sqrt(k2 + (eps_bare + extra) * a);
  return -((eps_bare - 1.0) + extra) * a / square(K3 + eta);
}

SurfaceResponse::SurfaceResponse(const MaterialSpec& mat, ReflectionModel model, double xi,
                                 double T)
    : model_(model), state_(transport_state(mat, T, xi)) {}

double SurfaceResponse::conduction_term() const {
  const double xi = state_.xi;
  switch (model_.kind) {
  case ModelKind::DriftCarrier: return state_.sigma() / (vacuum_permittivity * xi);
  case ModelKind::DrudeAdditive:
    return model_.drude_term == DrudeTerm::dc ? state_.sigma0 / (vacuum_permittivity * xi)
                                              : state_.sigma() / (vacuum_permittivity * xi);
  default: return 0.0;
  }
}

double SurfaceResponse::r_tm(double k) const {
  const TransportState& s = state_;
  if (model_.kind == ModelKind::PerfectMirror) return 1.0;

  if (s.xi == 0.0) {
    switch (model_.kind) {
    case ModelKind::DriftCarrier:
    case ModelKind::QuasiStatic: return screened_static_tm(s.eps_static, s.kappa, k);
    case ModelKind::DrudeAdditive:
      if (s.sigma0 > 0.0) return 1.0;
      [[fallthrough]];
    default: return (s.eps_static - 1.0) / (s.eps_static + 1.0);
    }
  }

  switch (model_.kind) {
  case ModelKind::DriftCarrier: {
    const DispersionPair d = dispersion(s, k);
    const double eK = s.eps_bare * d.K3;
    return (eK - d.chi) / (eK + d.chi);
  }
  case ModelKind::DrudeAdditive: return fresnel_tm(s.eps_bare, conduction_term(), s.xi, k);
  default: return fresnel_tm(s.eps_bare, 0.0, s.xi, k);
  }
}

double SurfaceResponse::r_te(double k) const {
  const TransportState& s = state_;
  if (model_.kind == ModelKind::PerfectMirror) return -1.0;
  if (s.xi == 0.0) return 0.0;

  switch (model_.kind) {
  case ModelKind::DriftCarrier: {
    // (K3 - eta_T)/(K3 + eta_T) = -(eta_T^2 - K3^2)/(K3 + eta_T)^2
    const DispersionPair d = dispersion(s, k);
    const double a = square(s.xi / speed_of_light);
    const double gap = ((s.eps_bare - 1.0) + conduction_term()) * a;
    return -gap / square(d.K3 + std::sqrt(d.eta_T_sq));
  }
  case ModelKind::DrudeAdditive: return fresnel_te(s.eps_bare, conduction_term(), s.xi, k);
  default: return fresnel_te(s.eps_bare, 0.0, s.xi, k);
  }
}

double r_tm(ReflectionModel model, const MaterialSpec& mat, const SpectralPoint& pt) {
  return SurfaceResponse(mat, model, pt.xi, pt.T).r_tm(pt.k);
}

double r_te(ReflectionModel model, const MaterialSpec& mat, const SpectralPoint& pt) {
  return SurfaceResponse(mat, model, pt.xi, pt.T).r_te(pt.k);
}

} // namespace casimir
