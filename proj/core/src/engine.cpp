#include "casimir/engine.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "lifshitz_integrand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace casimir {

using namespace constants;

std::string to_string(Polarization pol) {
  switch (pol) {
  case Polarization::TM: return "tm";
  case Polarization::TE: return "te";
  case Polarization::Both: return "both";
  }
  return "both";
}

nlohmann::json policy_to_json(const SummationPolicy& p) {
  return {{"rel_tol", p.rel_tol},
          {"abs_floor", p.abs_floor},
          {"max_matsubara", p.max_matsubara},
          {"quadrature_rel_tol", p.quadrature_rel_tol},
          {"truncation_safety", p.truncation_safety},
          {"derivative_rel_tol", p.derivative_rel_tol}};
}

void HalfSpaceConfig::validate() const {
  if (!(gap > 0.0) || !std::isfinite(gap)) throw ParameterError("config: gap must be > 0");
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw ParameterError("config: temperature must be > 0");
  material_1.validate();
  material_2.validate();
}

HalfSpaceConfig HalfSpaceConfig::symmetric(const MaterialSpec& mat, ReflectionModel model,
                                           double gap, double T) {
  return {mat, mat, model, model, gap, T};
}

namespace {

SeriesResult select(SeriesResult r, Polarization pol) {
  switch (pol) {
  case Polarization::TM:
    r.te = 0.0;
    r.value = r.tm;
    break;
  case Polarization::TE:
    r.tm = 0.0;
    r.value = r.te;
    break;
  case Polarization::Both: break;
  }
  return r;
}

struct PairResponse {
  SurfaceResponse s1;
  SurfaceResponse s2;

  PairResponse(const HalfSpaceConfig& cfg, double xi)
      : s1(cfg.material_1, cfg.model_1, xi, cfg.temperature),
        s2(cfg.material_2, cfg.model_2, xi, cfg.temperature) {}

  double tm(double k) const { return s1.r_tm(k) * s2.r_tm(k); }
  double te(double k) const { return s1.r_te(k) * s2.r_te(k); }
};

enum class Quantity { FreeEnergy, Pressure };

// Series-unit term for Matsubara index n (before the n = 0 halving).
TermPair lifshitz_term(const HalfSpaceConfig& cfg, int n, Quantity q, double rel_tol) {
  const double xi = matsubara_frequency(n, cfg.temperature);
  const double d = cfg.gap;
  const double y0 = 2.0 * xi * d / speed_of_light;
  const PairResponse pr(cfg, xi);

  auto integrand = [&](auto product) {
    return [&, product](const detail::KPoint& p) {
      const double x = product(p.k) * std::exp(-p.y);
      if (q == Quantity::FreeEnergy) return p.y * std::log1p(-x);
      return p.y * p.y * x / (1.0 - x);
    };
  };
  TermPair t;
  t.tm = detail::integrate_y(integrand([&](double k) { return pr.tm(k); }), y0, d, rel_tol);
  t.te = detail::integrate_y(integrand([&](double k) { return pr.te(k); }), y0, d, rel_tol);
  return t;
}

} // namespace

double g_function(const HalfSpaceConfig& cfg, const SpectralPoint& pt, Polarization pol) {
  const PairResponse pr(cfg, pt.xi);
  const double K3 = std::hypot(pt.k, pt.xi / speed_of_light);
  const double decay = std::exp(-2.0 * K3 * cfg.gap);
  const double g_tm = std::log1p(-pr.tm(pt.k) * decay);
  const double g_te = std::log1p(-pr.te(pt.k) * decay);
  switch (pol) {
  case Polarization::TM: return g_tm;
  case Polarization::TE: return g_te;
  case Polarization::Both: return g_tm + g_te;
  }
  return g_tm + g_te;
}

SeriesResult free_energy_per_area(const HalfSpaceConfig& cfg, Polarization pol,
                                  const SummationPolicy& policy) {
  cfg.validate();
  const double d = cfg.gap;
  const double kT = boltzmann * cfg.temperature;
  // kB T / (2 pi) * int k dk g, with k dk = y dy / (4 d^2)
  const double prefactor = kT / (8.0 * pi * d * d);
  const SeriesResult r = sum_matsubara(
      [&](int n) {
        return lifshitz_term(cfg, n, Quantity::FreeEnergy, policy.quadrature_rel_tol);
      },
      initial_matsubara_terms(d, cfg.temperature, policy), prefactor, policy,
      matsubara_decay_ratio(d, cfg.temperature));
  return select(r, pol);
}

SeriesResult pressure(const HalfSpaceConfig& cfg, const SummationPolicy& policy,
                      Polarization pol) {
  cfg.validate();
  const double d = cfg.gap;
  const double kT = boltzmann * cfg.temperature;
  // -(kB T / pi) int k dk K3 f, with k dk K3 = y^2 dy / (8 d^3)
  const double prefactor = -kT / (8.0 * pi * d * d * d);
  const SeriesResult r = sum_matsubara(
      [&](int n) {
        return lifshitz_term(cfg, n, Quantity::Pressure, policy.quadrature_rel_tol);
      },
      initial_matsubara_terms(d, cfg.temperature, policy), prefactor, policy,
      matsubara_decay_ratio(d, cfg.temperature));
  return select(r, pol);
}

SeriesResult entropy_per_area(const HalfSpaceConfig& cfg, const SummationPolicy& policy,
                              double initial_step) {
  cfg.validate();
  policy.validate();
  const double T = cfg.temperature;
  double h = initial_step > 0.0 ? initial_step : std::max(0.01 * T, 0.1);
  if (h >= T) h = 0.5 * T;

  SummationPolicy tight = policy;
  tight.rel_tol = std::min(policy.rel_tol, 1e-12);
  tight.quadrature_rel_tol = std::min(policy.quadrature_rel_tol, 1e-12);

  int max_terms = 0;
  auto energy = [&](double t) {
    HalfSpaceConfig c = cfg;
    c.temperature = t;
    const SeriesResult r = free_energy_per_area(c, Polarization::Both, tight);
    max_terms = std::max(max_terms, r.terms);
    return r.value;
  };
  auto slope = [&](double step) { return -(energy(T + step) - energy(T - step)) / (2.0 * step); };

  // Ridders-style Richardson table on halving steps; stop once the
  // extrapolation error starts to grow.
  constexpr int kLevels = 7;
  std::vector<std::vector<double>> table(kLevels, std::vector<double>(kLevels, 0.0));
  table[0][0] = slope(h);
  double best = table[0][0];
  double best_err = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kLevels; ++i) {
    h *= 0.5;
    table[i][0] = slope(h);
    double factor = 1.0;
    for (int j = 1; j <= i; ++j) {
      factor *= 4.0;
      table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
      const double err = std::max(std::abs(table[i][j] - table[i][j - 1]),
                                  std::abs(table[i][j] - table[i - 1][j - 1]));
      if (err <= best_err) {
        best_err = err;
        best = table[i][j];
      }
    }
    if (best_err <= policy.derivative_rel_tol * std::abs(best) + policy.abs_floor) break;
    if (std::abs(table[i][i] - table[i - 1][i - 1]) >= 2.0 * best_err) break;
  }

  if (!(best_err <= policy.derivative_rel_tol * std::abs(best) + policy.abs_floor)) {
    std::ostringstream os;
    os << "entropy: step-halving did not settle (estimate " << best << ", error " << best_err
       << ")";
    throw DifferentiationError(os.str(), best_err);
  }

  SeriesResult out;
  out.value = best;
  out.tm = std::numeric_limits<double>::quiet_NaN();
  out.te = std::numeric_limits<double>::quiet_NaN();
  out.tail_bound = best_err;
  out.terms = max_terms;
  return out;
}

} // namespace casimir
