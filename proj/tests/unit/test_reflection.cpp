#include "casimir/errors.hpp"
#include "casimir/material_io.hpp"
#include "casimir/reflection.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace casimir;
using oracles::rel_diff;

namespace {

MaterialSpec ge() { return load_material(oracles::material_path("ge.json")); }

MaterialSpec without_carriers(MaterialSpec m) {
  m.carriers.nc_prefactor = 0.0;
  return m;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

const ReflectionModel kAllModels[] = {
    ReflectionModel::drift(),         ReflectionModel::ideal_dielectric(),
    ReflectionModel::drude(),         ReflectionModel::drude(DrudeTerm::dc),
    ReflectionModel::quasi_static(),  ReflectionModel::perfect_mirror()};

} // namespace

TEST(ModelNames, RoundTrip) {
  for (const auto& m : kAllModels) {
    const auto parsed = parse_reflection_model(to_string(m));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, m);
  }
  EXPECT_FALSE(parse_reflection_model("plasma").has_value());
}

TEST(Reflection, AmplitudesBoundedForEveryModel) {
  const MaterialSpec g = ge();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> n_dist(0, 2000);
  std::uniform_real_distribution<double> t_dist(2.0, 600.0);
  for (int i = 0; i < 2000; ++i) {
    const double T = t_dist(rng);
    const SpectralPoint pt = SpectralPoint::matsubara(n_dist(rng), log_uniform(rng, 1e2, 1e10), T);
    for (const auto& m : kAllModels) {
      const double tm = r_tm(m, g, pt), te = r_te(m, g, pt);
      ASSERT_TRUE(std::isfinite(tm) && std::isfinite(te));
      EXPECT_LE(std::abs(tm), 1.0) << to_string(m) << " n=" << pt.n << " k=" << pt.k;
      EXPECT_LE(std::abs(te), 1.0) << to_string(m);
      EXPECT_LE(te, 0.0) << to_string(m);
    }
  }
}

TEST(Reflection, ZeroFrequencyForms) {
  const MaterialSpec g = ge();
  const double T = 300.0;
  const TransportState s = transport_state(g, T, 0.0);
  for (double k : {1e3, 1e5, 1e6, 1e7, 1e9}) {
    const SpectralPoint pt = SpectralPoint::matsubara(0, k, T);
    const double q = std::sqrt(k * k + s.kappa * s.kappa);
    const double screened = (s.eps_static * q - k) / (s.eps_static * q + k);
    EXPECT_LT(rel_diff(r_tm(ReflectionModel::drift(), g, pt), screened), 1e-14);
    EXPECT_LT(rel_diff(r_tm(ReflectionModel::quasi_static(), g, pt), screened), 1e-14);
    EXPECT_DOUBLE_EQ(r_tm(ReflectionModel::ideal_dielectric(), g, pt), (16.2 - 1.0) / (16.2 + 1.0));
    EXPECT_DOUBLE_EQ(r_tm(ReflectionModel::drude(), g, pt), 1.0);
    for (const auto& m : kAllModels)
      if (m.kind != ModelKind::PerfectMirror) EXPECT_EQ(r_te(m, g, pt), 0.0);
  }
  // long wavelengths see a screened conductor, short ones the bare dielectric
  EXPECT_GT(r_tm(ReflectionModel::drift(), g, SpectralPoint::matsubara(0, 1e2, T)), 1.0 - 1e-3);
  EXPECT_NEAR(r_tm(ReflectionModel::drift(), g, SpectralPoint::matsubara(0, 1e11, T)),
              15.2 / 17.2, 1e-6);
}

TEST(Reflection, DispersionNeedsPositiveFrequency) {
  const MaterialSpec g = ge();
  EXPECT_THROW(dispersion(g, SpectralPoint::at_frequency(0.0, 1e6, 300.0)),
               QuasiStaticLimitRequired);
}

TEST(Reflection, DriftApproachesScreenedStaticLimit) {
  const MaterialSpec g = ge();
  for (double T : {200.0, 300.0, 450.0}) {
    for (double k : {3e4, 1e6, 3e7}) {
      const TransportState s = transport_state(g, T, 0.0);
      const double c = oracles::c;
      const double q2 = k * k + s.kappa * s.kappa;
      const double xi0 = 1e-3 * std::min({s.omega_c, c * k,
                                          oracles::eps_vac * c * c * k * k / s.sigma0,
                                          s.diffusion * q2, 1.0 / s.tau});
      const double limit = oracles::extrapolate_to_zero(
          [&](double xi) {
            return r_tm(ReflectionModel::drift(), g, SpectralPoint::at_frequency(xi, k, T));
          },
          xi0);
      const double q = std::sqrt(q2);
      const double expect = (s.eps_static * q - k) / (s.eps_static * q + k);
      EXPECT_LT(rel_diff(limit, expect), 1e-6) << "T=" << T << " k=" << k;
      const double te_limit = oracles::extrapolate_to_zero(
          [&](double xi) {
            return r_te(ReflectionModel::drift(), g, SpectralPoint::at_frequency(xi, k, T));
          },
          xi0);
      EXPECT_LT(std::abs(te_limit), 1e-8);
    }
  }
}

TEST(Reflection, NoCarriersGivesFresnel) {
  const MaterialSpec g = without_carriers(ge());
  for (double xi = 1e11; xi < 1e18; xi *= 3.1) {
    for (double k = 1e3; k < 1e10; k *= 2.7) {
      const SpectralPoint pt = SpectralPoint::at_frequency(xi, k, 300.0);
      const double eps = permittivity_bare(g.permittivity, xi);
      EXPECT_LT(rel_diff(r_tm(ReflectionModel::drift(), g, pt), fresnel_tm(eps, 0.0, xi, k)),
                1e-12);
      EXPECT_LT(rel_diff(r_te(ReflectionModel::drift(), g, pt), fresnel_te(eps, 0.0, xi, k)),
                1e-12);
    }
  }
}

TEST(Reflection, FresnelMatchesTextbookForm) {
  for (double eps : {1.5, 4.0, 16.2, 1e4}) {
    for (double xi : {1e12, 1e14, 1e16}) {
      for (double k : {1e4, 1e6, 1e8}) {
        // extended precision absorbs the K3 - eta cancellation of the naive form
        using ld = long double;
        const ld a = ld(xi) * ld(xi) / (ld(oracles::c) * ld(oracles::c));
        const ld K3 = std::sqrt(ld(k) * ld(k) + a);
        const ld eta = std::sqrt(ld(k) * ld(k) + ld(eps) * a);
        const double tm = static_cast<double>((eps * K3 - eta) / (eps * K3 + eta));
        const double te = static_cast<double>((K3 - eta) / (K3 + eta));
        EXPECT_LT(rel_diff(fresnel_tm(eps, 0.0, xi, k), tm), 1e-9);
        EXPECT_LT(rel_diff(fresnel_te(eps, 0.0, xi, k), te), 1e-9);
      }
    }
  }
}

TEST(Reflection, DriftTeEqualsDrudeAc) {
  const MaterialSpec g = ge();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const SpectralPoint pt =
        SpectralPoint::at_frequency(log_uniform(rng, 1e9, 1e18), log_uniform(rng, 1e2, 1e10), 300.0);
    const double a = r_te(ReflectionModel::drift(), g, pt);
    const double b = r_te(ReflectionModel::drude(), g, pt);
    EXPECT_LE(rel_diff(a, b), 1e-14);
  }
}

TEST(Reflection, ClosedFormMatchesInterfaceMatching) {
  const MaterialSpec g = ge();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> t_dist(150.0, 600.0);
  for (int i = 0; i < 300; ++i) {
    const SpectralPoint pt = SpectralPoint::at_frequency(
        log_uniform(rng, 1e10, 1e17), log_uniform(rng, 1e3, 1e9), t_dist(rng));
    const double closed = r_tm(ReflectionModel::drift(), g, pt);
    const double oracle = r_tm_bvp_oracle(g, pt);
    EXPECT_LT(rel_diff(closed, oracle), 1e-8) << "xi=" << pt.xi << " k=" << pt.k;
  }
}

TEST(Reflection, PerfectMirror) {
  const MaterialSpec g = ge();
  for (int n : {0, 1, 50}) {
    const SpectralPoint pt = SpectralPoint::matsubara(n, 1e6, 300.0);
    EXPECT_EQ(r_tm(ReflectionModel::perfect_mirror(), g, pt), 1.0);
    EXPECT_EQ(r_te(ReflectionModel::perfect_mirror(), g, pt), -1.0);
  }
}

TEST(Reflection, QuasiStaticUsesBareAboveZero) {
  const MaterialSpec g = ge();
  const SpectralPoint pt = SpectralPoint::matsubara(3, 1e6, 300.0);
  EXPECT_EQ(r_tm(ReflectionModel::quasi_static(), g, pt),
            r_tm(ReflectionModel::ideal_dielectric(), g, pt));
  EXPECT_EQ(r_te(ReflectionModel::quasi_static(), g, pt),
            r_te(ReflectionModel::ideal_dielectric(), g, pt));
}

TEST(Reflection, CarriersOnlyIncreaseTmAtLowFrequency) {
  // screening makes the surface look more metallic
  const MaterialSpec g = ge();
  for (double k : {1e4, 1e5, 1e6}) {
    const SpectralPoint pt = SpectralPoint::matsubara(1, k, 300.0);
    EXPECT_GE(r_tm(ReflectionModel::drift(), g, pt),
              r_tm(ReflectionModel::ideal_dielectric(), g, pt));
  }
}

TEST(Reflection, StrictBoundsAndPassivity) {
  // Drude at n = 0 is exactly 1 by construction, so it is excluded there
  const MaterialSpec g = ge();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> n_dist(0, 500);
  std::uniform_real_distribution<double> t_dist(20.0, 600.0);
  for (int i = 0; i < 3000; ++i) {
    const SpectralPoint pt =
        SpectralPoint::matsubara(n_dist(rng), log_uniform(rng, 1e2, 1e10), t_dist(rng));
    for (const auto& m : kAllModels) {
      if (m.kind == ModelKind::PerfectMirror) continue;
      if (m.kind == ModelKind::DrudeAdditive && pt.n == 0) continue;
      const double tm = r_tm(m, g, pt), te = r_te(m, g, pt);
      EXPECT_GT(tm, 0.0) << to_string(m);
      EXPECT_LT(tm, 1.0) << to_string(m);
      EXPECT_GT(te, -1.0) << to_string(m);
      EXPECT_LE(te, 0.0) << to_string(m);
    }
  }
}

TEST(Reflection, QuasiStaticMonotonicity) {
  const MaterialSpec g = ge();
  const double T = 300.0;
  double prev = 2.0;
  for (double k = 1e3; k < 1e10; k *= 1.5) {
    const double r = r_tm(ReflectionModel::quasi_static(), g, SpectralPoint::matsubara(0, k, T));
    EXPECT_LT(r, prev) << k;
    prev = r;
  }
  // kappa grows with the carrier density prefactor
  prev = -1.0;
  for (double scale = 1e-6; scale < 1e6; scale *= 4.0) {
    MaterialSpec m = g;
    m.carriers.nc_prefactor *= scale;
    const double r = r_tm(ReflectionModel::quasi_static(), m, SpectralPoint::matsubara(0, 1e6, T));
    EXPECT_GT(r, prev) << scale;
    prev = r;
  }
}

TEST(Reflection, ZeroFrequencyOrdering) {
  const MaterialSpec g = ge();
  for (double T : {50.0, 300.0, 600.0}) {
    for (double k = 1e2; k < 1e10; k *= 3.0) {
      const SpectralPoint pt = SpectralPoint::matsubara(0, k, T);
      const double bare = std::abs(r_tm(ReflectionModel::ideal_dielectric(), g, pt));
      const double drift = std::abs(r_tm(ReflectionModel::drift(), g, pt));
      const double drude = std::abs(r_tm(ReflectionModel::drude(), g, pt));
      EXPECT_LE(bare, drift);
      EXPECT_LE(drift, drude);
      EXPECT_EQ(drude, 1.0);
    }
  }
}

TEST(Reflection, TransparentAtHighFrequency) {
  const MaterialSpec g = ge();
  for (double f : {100.0, 1e3, 1e4}) {
    const double xi = f * g.permittivity.omega0;
    const SpectralPoint pt = SpectralPoint::at_frequency(xi, xi / oracles::c, 300.0);
    for (const auto& m : kAllModels) {
      if (m.kind == ModelKind::PerfectMirror) continue;
      EXPECT_LT(std::abs(r_tm(m, g, pt)), 0.05) << to_string(m);
      EXPECT_LT(std::abs(r_te(m, g, pt)), 0.05) << to_string(m);
    }
  }
}

TEST(Reflection, OnlyStaticTmFeelsCarriers) {
  const MaterialSpec g = ge();
  for (int n = 1; n <= 50; ++n) {
    const double xi = matsubara_frequency(n, 300.0);
    for (double k = 1e3; k < 1e10; k *= 2.0) {
      const SpectralPoint hot = SpectralPoint::at_frequency(xi, k, 300.0);
      const SpectralPoint cold = SpectralPoint::at_frequency(xi, k, 1.0);
      EXPECT_LT(std::abs(r_tm(ReflectionModel::drift(), g, hot) -
                         r_tm(ReflectionModel::ideal_dielectric(), g, hot)),
                1e-3);
      EXPECT_LT(rel_diff(r_te(ReflectionModel::drift(), g, hot),
                         r_te(ReflectionModel::drift(), g, cold)),
                1e-3);
    }
  }
}
