#include "casimir/engine.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "lifshitz_integrand.hpp"

#include <cmath>
#include <limits>

namespace casimir {

using namespace constants;

Polarizability oscillator_polarizability(double alpha0, double omega_a) {
  if (!(omega_a > 0.0) || !std::isfinite(omega_a))
    return [alpha0](double) { return alpha0; };
  return [alpha0, omega_a](double xi) {
    const double x = xi / omega_a;
    return alpha0 / (1.0 + x * x);
  };
}

SeriesResult casimir_polder_energy(const Polarizability& alpha, const MaterialSpec& surface,
                                   ReflectionModel model, double distance, double T,
                                   const SummationPolicy& policy) {
  if (!(distance > 0.0) || !std::isfinite(distance))
    throw ParameterError("casimir-polder: distance must be > 0");
  if (!(T > 0.0) || !std::isfinite(T))
    throw ParameterError("casimir-polder: temperature must be > 0");
  surface.validate();

  const double d = distance;
  // k dk K3 = y^2 dy / (8 d^3); xi^2/(K3^2 c^2) = y0^2/y^2
  const double prefactor = -boltzmann * T / (8.0 * d * d * d);

  auto term = [&](int n) {
    const double xi = matsubara_frequency(n, T);
    const double a = alpha(xi);
    if (!(a >= 0.0)) throw ParameterError("casimir-polder: polarizability must be >= 0");
    // Gaussian-unit polarizability volume
    const double volume = a / (4.0 * pi * vacuum_permittivity);
    TermPair t;
    if (volume == 0.0) return t;

    const double y0 = 2.0 * xi * d / speed_of_light;
    const SurfaceResponse s(surface, model, xi, T);
    t.tm = volume * detail::integrate_y(
                        [&](const detail::KPoint& p) {
                          return s.r_tm(p.k) * (2.0 * p.y * p.y - y0 * y0) * std::exp(-p.y);
                        },
                        y0, d, policy.quadrature_rel_tol);
    if (y0 > 0.0) {
      t.te = volume * detail::integrate_y(
                          [&](const detail::KPoint& p) {
                            return -s.r_te(p.k) * y0 * y0 * std::exp(-p.y);
                          },
                          y0, d, policy.quadrature_rel_tol);
    }
    return t;
  };

  return sum_matsubara(term, initial_matsubara_terms(d, T, policy), prefactor, policy,
                       matsubara_decay_ratio(d, T));
}

} // namespace casimir
