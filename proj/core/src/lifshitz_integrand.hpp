#pragma once

// Shared k-quadrature for the Lifshitz-type Matsubara terms.
//
// Each term is an integral over K3 in [xi/c, inf). With y = 2 K3 d and
// y0 = 2 xi d / c, k dk = y dy / (4 d^2) and k^2 = (y - y0)(y + y0)/(4 d^2).
// The integration runs over t with y = y0 + t^2 on t in [0, sqrt(kSpan)]:
// the square root maps the k -> 0, xi = 0 logarithmic endpoint of g onto a
// smooth integrand and keeps the exp(-y) decay Gaussian in t.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace casimir::detail {

inline constexpr double kSpan = 80.0; // exp(-80) ~ 1.8e-35
// Beyond this the integrand sits near the subnormal range, where the
// relative-tolerance quadrature recurses to full depth for nothing.
inline constexpr double kNegligibleY0 = 600.0;

struct KPoint {
  double y;  // 2 K3 d
  double k;  // transverse wavenumber
  double jac; // dy/dt
};

inline KPoint k_point(double t, double y0, double gap) {
  const double u = t * t;
  return {y0 + u, std::sqrt(u * (u + 2.0 * y0)) / (2.0 * gap), 2.0 * t};
}

/// Integrates f(KPoint) dy over y in [y0, y0 + kSpan].
template <class F>
double integrate_y(F&& f, double y0, double gap, double rel_tol) {
  auto integrand = [&](double t) {
    const KPoint p = k_point(t, y0, gap);
    return f(p) * p.jac;
  };
  if (y0 > kNegligibleY0) return 0.0;
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, std::sqrt(kSpan), 20, rel_tol, &error);
}

} // namespace casimir::detail
