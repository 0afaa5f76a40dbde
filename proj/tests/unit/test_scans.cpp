#include "casimir/engine.hpp"
#include "casimir/errors.hpp"
#include "casimir/material_io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace casimir;

namespace {

MaterialSpec ge() { return load_material(oracles::material_path("ge.json")); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

} // namespace

TEST(ScanResult, CsvLayout) {
  ScanResult r;
  r.axes = {{"d_m", "m", {1e-6, 2e-6}}};
  r.columns = {{"d_m", "m"}, {"value", "1"}};
  r.rows = {{1e-6, 0.123456789012}, {2e-6, -3.0}};
  const auto l = lines(r.to_csv());
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "d_m,value");
  EXPECT_EQ(l[1], "1e-06,0.123456789");
  EXPECT_EQ(l[2], "2e-06,-3");
  EXPECT_EQ(format_csv_number(1.0 / 3.0), "0.333333333");
}

TEST(ScanResult, JsonIsLossless) {
  ScanResult r;
  r.axes = {{"x", "1", {0.1}}};
  r.columns = {{"x", "1"}, {"y", "1"}};
  r.rows = {{0.1, 1.0 / 3.0}};
  const auto j = r.to_json();
  EXPECT_EQ(j.at("rows")[0][1].get<double>(), 1.0 / 3.0);
  EXPECT_EQ(nlohmann::json::parse(j.dump()).at("rows")[0][1].get<double>(), 1.0 / 3.0);
}

TEST(ScanResult, ShapeCheck) {
  ScanResult r;
  r.axes = {{"x", "1", {1.0, 2.0}}};
  r.columns = {{"x", "1"}, {"y", "1"}};
  r.rows = {{1.0, 2.0}};
  EXPECT_THROW(r.check_shape(), ParameterError);
  r.rows = {{1.0, 2.0}, {2.0}};
  EXPECT_THROW(r.check_shape(), ParameterError);
  r.rows = {{1.0, 2.0}, {2.0, 3.0}};
  EXPECT_NO_THROW(r.check_shape());
}

TEST(Scans, RatioScanColumns) {
  const std::vector<double> d{1e-7, 1e-6, 1e-5};
  const ScanResult r = ratio_scan(ge(), ReflectionModel::drift(), ReflectionModel::ideal_dielectric(),
                                  d, 300.0, SummationPolicy{});
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.columns[0].name, "d_m");
  EXPECT_EQ(r.columns[1].name, "ratio");
  EXPECT_EQ(r.columns[2].name, "tail_bound");
  for (const auto& row : r.rows) {
    EXPECT_DOUBLE_EQ(row[1], row[3] / row[4]);
    EXPECT_GE(row[1], 1.0);
  }
  EXPECT_TRUE(r.metadata.contains("material"));
  EXPECT_THROW(ratio_scan(ge(), ReflectionModel::drift(), ReflectionModel::ideal_dielectric(),
                          std::vector<double>{1e-6, 1e-7}, 300.0, SummationPolicy{}),
               ParameterError);
}

TEST(Scans, GSurfaceGrid) {
  const HalfSpaceConfig cfg = HalfSpaceConfig::symmetric(ge(), ReflectionModel::drift(), 1e-6, 300);
  const std::vector<int> n{0, 1, 2};
  const std::vector<double> k{1e5, 1e6, 1e7, 1e8};
  const ScanResult r = g_surface_scan_matsubara(cfg, n, k);
  ASSERT_EQ(r.rows.size(), 12u);
  EXPECT_NO_THROW(r.check_shape());
  for (const auto& row : r.rows) {
    const SpectralPoint pt = SpectralPoint::matsubara(static_cast<int>(row[0]), row[2], 300.0);
    EXPECT_EQ(row[3], g_function(cfg, pt, Polarization::TM));
    EXPECT_EQ(row[4], g_function(cfg, pt, Polarization::TE));
  }
  const ScanResult threaded = g_surface_scan_matsubara(cfg, n, k, 4);
  EXPECT_EQ(threaded.to_csv(), r.to_csv());
}

TEST(Scans, ReflectionDump) {
  const std::vector<int> n{0, 5};
  const std::vector<double> k{1e6, 1e7};
  const ScanResult r = reflection_dump(ge(), ReflectionModel::drift(), 300.0, n, k);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.columns.size(), 5u);
  EXPECT_EQ(r.rows[0][4], 0.0); // TE vanishes at n = 0
}
