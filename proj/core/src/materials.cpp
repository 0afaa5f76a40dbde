#include "casimir/materials.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

// pchip.hpp in Boost 1.74 calls unqualified isnan
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/math/interpolators/pchip.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace casimir {

namespace {

using namespace constants;

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

} // namespace

void SellmeierModel::validate() const {
  require(std::isfinite(eps_static) && std::isfinite(eps_inf),
          "sellmeier: permittivities must be finite");
  require(eps_inf >= 1.0, "sellmeier: eps_inf must be >= 1");
  require(eps_static >= eps_inf, "sellmeier: eps_static must be >= eps_inf");
  require(std::isfinite(omega0) && omega0 > 0.0, "sellmeier: omega0 must be > 0");
}

void CarrierModel::validate() const {
  require(finite_nonneg(band_gap), "carriers: band_gap must be >= 0");
  require(finite_nonneg(nc_prefactor) && finite_nonneg(nv_prefactor),
          "carriers: density prefactors must be >= 0");
  require(std::isfinite(density_exponent), "carriers: density_exponent must be finite");
  require(std::isfinite(reference_temperature) && reference_temperature > 0.0,
          "carriers: reference_temperature must be > 0");
  require(doubling_factor >= 1.0 && doubling_factor <= 2.0,
          "carriers: doubling_factor must lie in [1, 2]");
}

// Monotone cubic (PCHIP) through the table when it has enough nodes,
// piecewise linear otherwise.
struct TransportModel::Interpolant {
  std::vector<TableEntry> nodes;
  std::unique_ptr<boost::math::interpolators::pchip<std::vector<double>>> cubic;

  double operator()(double T) const {
    if (cubic) return (*cubic)(T);
    auto hi = std::upper_bound(nodes.begin(), nodes.end(), T,
                               [](double t, const TableEntry& e) { return t < e.first; });
    if (hi == nodes.end()) return nodes.back().second;
    auto lo = std::prev(hi);
    const double w = (T - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
  }
};

TransportModel::TransportModel()
    : TransportModel(electron_mass, {{1.0e4, 1.0e-13}}) {}

TransportModel::TransportModel(double effective_mass, std::vector<TableEntry> tau_table)
    : effective_mass_(effective_mass), table_(std::move(tau_table)) {
  require(std::isfinite(effective_mass_) && effective_mass_ > 0.0,
          "transport: effective_mass must be > 0");
  require(!table_.empty(), "transport: tau_table must not be empty");
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const auto [T, tau] = table_[i];
    require(std::isfinite(T) && T >= 0.0, "transport: table temperatures must be >= 0");
    require(std::isfinite(tau) && tau > 0.0, "transport: relaxation times must be > 0");
    if (i > 0)
      require(T > table_[i - 1].first,
              "transport: table temperatures must be strictly increasing");
  }

  auto interp = std::make_shared<Interpolant>();
  interp->nodes = table_;
  if (table_.size() >= 4) {
    std::vector<double> xs, ys;
    for (const auto& [T, tau] : table_) {
      xs.push_back(T);
      ys.push_back(tau);
    }
    interp->cubic = std::make_unique<boost::math::interpolators::pchip<std::vector<double>>>(
        std::move(xs), std::move(ys));
  }
  interp_ = std::move(interp);
}

double TransportModel::relaxation_time(double T) const {
  if (!(T >= 0.0) || !std::isfinite(T))
    throw DomainError("relaxation_time: temperature must be finite and >= 0");
  if (T <= table_.front().first) return table_.front().second;
  if (T > table_.back().first) {
    std::ostringstream os;
    os << "relaxation_time: T = " << T << " K is above the tabulated range (max "
       << table_.back().first << " K)";
    throw DomainError(os.str());
  }
  // PCHIP preserves monotonicity between nodes, so positivity of the
  // nodes carries over; the clamp only guards rounding at the ends.
  return std::max((*interp_)(T), std::numeric_limits<double>::min());
}

void MaterialSpec::validate() const {
  permittivity.validate();
  carriers.validate();
}

double permittivity_bare(const SellmeierModel& model, double xi) {
  const double w2 = model.omega0 * model.omega0;
  return model.eps_inf + w2 * (model.eps_static - model.eps_inf) / (xi * xi + w2);
}

double carrier_density(const CarrierModel& model, double T) {
  if (!(T > 0.0)) return 0.0;
  const double scale = std::pow(T / model.reference_temperature, model.density_exponent);
  const double states = std::sqrt(model.nc_prefactor * model.nv_prefactor) * scale;
  return model.doubling_factor * states * std::exp(-model.band_gap / (2.0 * boltzmann * T));
}

double relaxation_time(const TransportModel& model, double T) {
  return model.relaxation_time(T);
}

TransportState transport_state(const MaterialSpec& mat, double T, double xi) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw DomainError("transport_state: temperature must be > 0");
  if (!(xi >= 0.0) || !std::isfinite(xi))
    throw DomainError("transport_state: xi must be finite and >= 0");

  TransportState s;
  s.xi = xi;
  s.temperature = T;
  s.tau = mat.transport.relaxation_time(T);
  s.eps_bare = permittivity_bare(mat.permittivity, xi);
  s.eps_static = mat.permittivity.eps_static;

  const double e = elementary_charge;
  const double m = mat.transport.effective_mass();
  const double kT = boltzmann * T;

  s.n0 = carrier_density(mat.carriers, T);
  s.mobility = e * s.tau / m;
  s.sigma0 = e * s.n0 * s.mobility;
  s.v_thermal = std::sqrt(kT / m);
  s.diffusion = s.v_thermal * s.v_thermal * s.tau;

  const double relax = 1.0 + xi * s.tau;
  s.omega_c = s.sigma0 / (s.eps_bare * vacuum_permittivity);
  s.omega_c_tilde = s.omega_c / relax;
  s.diffusion_tilde = s.diffusion / relax;
  s.kappa = std::sqrt(e * e * s.n0 / (s.eps_static * vacuum_permittivity * kT));
  return s;
}

double debye_length(const MaterialSpec& mat, double T) {
  const double kappa = transport_state(mat, T, 0.0).kappa;
  return kappa > 0.0 ? 1.0 / kappa : std::numeric_limits<double>::infinity();
}

} // namespace casimir
