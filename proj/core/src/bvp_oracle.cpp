#include "casimir/reflection.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace casimir {

// Fields on the imaginary axis (omega = i xi), common factor e^{ikx} dropped.
//
// Vacuum, z > 0: H_y = e^{K3 z} + r e^{-K3 z}. Ampere's law gives
//   E_x = -(1/eps_vac xi) dH_y/dz,   E_z = i (k/eps_vac xi) H_y.
// Medium, z < 0, two decaying modes:
//   E_x = A_T e^{eta_T z} + A_L e^{eta_L z}
//   E_z = -i (k/eta_T) A_T e^{eta_T z} - i (eta_L/k) A_L e^{eta_L z}
//   H_y = -(eta_T^2 - k^2)/(mu0 xi eta_T) A_T e^{eta_T z}
// Continuity of E_x, H_y and eps*E_z at z = 0 with a = eps_vac xi A_T / K3,
// b = eps_vac xi A_L / K3 gives the real system below. The overall factor
// i on E_z cancels between both sides.
double r_tm_bvp_oracle(const MaterialSpec& mat, const SpectralPoint& pt) {
  using namespace constants;
  if (!(pt.xi > 0.0)) throw QuasiStaticLimitRequired("bvp oracle: requires xi > 0");
  if (!(pt.k > 0.0)) throw DomainError("bvp oracle: requires k > 0");

  const TransportState s = transport_state(mat, pt.T, pt.xi);
  const double k = pt.k;
  const double k2 = k * k;
  const double xi_c2 = (pt.xi / speed_of_light) * (pt.xi / speed_of_light);

  // transverse and longitudinal decay constants, written with the
  // (1 + omega_c~/xi) grouping of the wave equation
  const double drive = 1.0 + s.omega_c_tilde / pt.xi;
  const double eps_eff = s.eps_bare * drive; // (eta_T^2 - k^2) c^2 / xi^2
  const double eta_T = std::sqrt(k2 + eps_eff * xi_c2);
  const double eta_L = std::sqrt(k2 + (pt.xi / s.diffusion_tilde) * drive);
  const double K3 = std::sqrt(k2 + xi_c2);

  Eigen::Matrix3d m;
  Eigen::Vector3d rhs;
  // E_x:        r - a - b = 1
  m << 1.0, -1.0, -1.0,
      // H_y:      r + K3 eps_eff / eta_T a = -1
      1.0, K3 * eps_eff / eta_T, 0.0,
      // eps E_z:  r + eps K3/eta_T a + eps eta_L K3/k^2 b = -1
      1.0, s.eps_bare * K3 / eta_T, s.eps_bare * eta_L * K3 / k2;
  rhs << 1.0, -1.0, -1.0;

  const Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
  if (!lu.isInvertible()) {
    std::ostringstream os;
    os << "bvp oracle: singular matching matrix at k = " << k << " 1/m, xi = " << pt.xi
       << " rad/s";
    throw DegeneracyError(os.str(), k, pt.xi);
  }
  const Eigen::Vector3d x = lu.solve(rhs);
  return x(0);
}

} // namespace casimir
