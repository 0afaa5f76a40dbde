#include "casimir/errors.hpp"
#include "cli.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace casimir;
using namespace casimir::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("casimir-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const nlohmann::json& doc) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << doc.dump(2);
    return p;
  }

  nlohmann::json base(const std::string& command) const {
    return {{"command", command},
            {"material_1", oracles::material_path("ge.json").string()},
            {"model", "drift"},
            {"gap", 1e-6},
            {"temperature", 300.0},
            {"output", {{"path", (dir_ / (command + ".out")).string()}, {"format", "csv"}}}};
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

} // namespace

TEST_F(CliTest, GridForms) {
  auto doc = base("ratio-scan");
  doc["grids"] = {{"d", {{"start", 1e-7}, {"stop", 1e-5}, {"count", 3}, {"spacing", "log"}}}};
  RunConfig cfg = load_run_config(write("a.json", doc));
  ASSERT_EQ(cfg.d_grid.size(), 3u);
  EXPECT_NEAR(cfg.d_grid[1], 1e-6, 1e-18);
  EXPECT_EQ(cfg.d_grid[2], 1e-5);

  doc = base("reflection-dump");
  doc["grids"] = {{"n", {{"start", 0}, {"stop", 6}, {"step", 2}}}, {"k", {1e5, 1e6}}};
  cfg = load_run_config(write("b.json", doc));
  EXPECT_EQ(cfg.n_grid, (std::vector<int>{0, 2, 4, 6}));
}

TEST_F(CliTest, SchemaViolations) {
  auto doc = base("pressure");
  doc["gap"] = -1e-6;
  EXPECT_THROW(load_run_config(write("neg.json", doc)), ParameterError);

  doc = base("pressure");
  doc["colour"] = "blue";
  EXPECT_THROW(load_run_config(write("key.json", doc)), ParameterError);

  doc = base("ratio-scan");
  doc["grids"] = {{"d", {1e-6, 1e-7}}};
  EXPECT_THROW(load_run_config(write("order.json", doc)), ParameterError);

  doc = base("pressure");
  doc["model"] = "plasma";
  EXPECT_THROW(load_run_config(write("model.json", doc)), ParameterError);

  doc = base("fly");
  EXPECT_THROW(load_run_config(write("cmd.json", doc)), ParameterError);
}

TEST_F(CliTest, ValidateReportsScreeningLength) {
  const ValidationReport r = validate(write("ok.json", base("pressure")));
  EXPECT_TRUE(r.violations.empty());
  bool found = false;
  for (const auto& n : r.notes)
    if (n.find("Debye length = 6.8e-07 m") != std::string::npos) found = true;
  EXPECT_TRUE(found);

  auto doc = base("pressure");
  doc["gap"] = -1e-6;
  const ValidationReport bad = validate(write("neg.json", doc));
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_NE(bad.violations[0].find("gap"), std::string::npos);
}

TEST_F(CliTest, GapOverrideGivesScalarJson) {
  auto doc = base("pressure");
  doc["output"]["format"] = "csv";
  const fs::path cfg = write("p.json", doc);
  Overrides ov;
  ov.gap = 2e-6;
  ov.format = "json";
  ov.output = (dir_ / "p.json.out").string();
  std::ostringstream out, err;
  ASSERT_EQ(run(cfg, ov, out, err), kOk) << err.str();
  const auto j = nlohmann::json::parse(slurp(dir_ / "p.json.out"));
  EXPECT_EQ(j.at("quantity"), "pressure_Pa");
  EXPECT_EQ(j.at("metadata").at("config").at("gap_m").get<double>(), 2e-6);
  EXPECT_LT(j.at("value").get<double>(), 0.0);
  EXPECT_NE(out.str().find("pressure_Pa = "), std::string::npos);
  EXPECT_TRUE(err.str().empty());
}

TEST_F(CliTest, MalformedMaterialFailsWithoutOutput) {
  const fs::path mat = dir_ / "broken.json";
  std::ofstream(mat) << "{\"name\": \"X\", \"permittivity\": ";
  auto doc = base("pressure");
  doc["material_1"] = mat.string();
  std::ostringstream out, err;
  EXPECT_EQ(run(write("m.json", doc), {}, out, err), kSchemaError);
  EXPECT_FALSE(fs::exists(dir_ / "pressure.out"));
  const auto line = nlohmann::json::parse(err.str());
  EXPECT_EQ(line.at("exit_code"), 1);
}

TEST_F(CliTest, ExitCodes) {
  std::ostringstream out, err;
  auto doc = base("pressure");
  doc["temperature"] = 900.0;
  EXPECT_EQ(run(write("hot.json", doc), {}, out, err), kDomainError);
  EXPECT_EQ(nlohmann::json::parse(err.str()).at("error"), "domain");

  std::ostringstream out2, err2;
  Overrides ov;
  ov.max_n = 3;
  ov.gap = 1e-8;
  EXPECT_EQ(run(write("cap.json", base("pressure")), ov, out2, err2), kConvergenceError);
  EXPECT_FALSE(fs::exists(dir_ / "pressure.out"));
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  auto doc = base("ratio-scan");
  doc["grids"] = {{"d", {{"start", 1e-7}, {"stop", 1e-5}, {"count", 5}, {"spacing", "log"}}}};
  const fs::path cfg = write("r.json", doc);
  std::string first;
  for (unsigned threads : {1u, 2u, 8u}) {
    Overrides ov;
    ov.threads = threads;
    ov.output = (dir_ / ("r" + std::to_string(threads) + ".csv")).string();
    std::ostringstream out, err;
    ASSERT_EQ(run(cfg, ov, out, err), kOk) << err.str();
    const std::string text = slurp(*ov.output);
    if (first.empty()) first = text;
    EXPECT_EQ(text, first);
  }
  EXPECT_EQ(first.rfind("# {", 0), 0u);
  EXPECT_NE(first.find("\nd_m,ratio,tail_bound"), std::string::npos);
}

TEST_F(CliTest, ModelOverrideAppliesToBothPlates) {
  Overrides ov;
  ov.model = "bare";
  const RunConfig cfg = load_run_config(write("o.json", base("free-energy")), ov);
  EXPECT_EQ(cfg.plates.model_1, ReflectionModel::ideal_dielectric());
  EXPECT_EQ(cfg.plates.model_2, ReflectionModel::ideal_dielectric());
}
