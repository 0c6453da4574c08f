#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qrf/errors.hpp"
#include "qrf/experiment.hpp"
#include "qrf/fixture.hpp"

using namespace qrf;
using namespace qrf::experiment;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("qrf-test-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const char* cli_path() {
  if (const char* env = std::getenv("QRF_CLI")) return env;
#ifdef QRF_CLI
  return QRF_CLI;
#else
  return nullptr;
#endif
}

int run_cli(const std::string& args) {
  const char* cli = cli_path();
  if (!cli) return -1;
  const int status = std::system((std::string(cli) + " " + args + " 2>/dev/null").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(ParseConfig, KeysCommentsAndWhitespace) {
  const auto c = parse_config("# trajectory\nkind = classical-trajectory\r\n\tomega_A=1 \nomega_B = pi/2 # note\n\nseed = 9\n");
  EXPECT_EQ(c.kind, "classical-trajectory");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.get("omega_A"), "1");
  EXPECT_EQ(c.get("omega_B"), "pi/2");
  EXPECT_FALSE(c.get("dt"));
}

TEST(ParseConfig, Errors) {
  EXPECT_THROW(parse_config("omega_A = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("kind = nonsense\n"), ConfigError);
  EXPECT_THROW(parse_config("kind = wigner-study\nstudy\n"), ConfigError);
  EXPECT_THROW(parse_config("kind = wigner-study\n = 3\n"), ConfigError);
  EXPECT_THROW(parse_config("kind = wigner-study\nalpha =\n"), ConfigError);
  EXPECT_THROW(parse_config("kind = wigner-study\nalpha = 1\nalpha = 2\n"), ConfigError);
  EXPECT_THROW(parse_config("kind = wigner-study\nseed = -4\n"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/qrf.cfg"), ConfigError);
}

TEST(RunExperiment, RejectsBadKeys) {
  auto base = parse_config("kind = classical-trajectory\nomega_A = 1\nomega_B = 2\nt_final = 1\n");
  base.output_dir = scratch("badkeys");
  auto c = base;
  c.set("colour", "blue");
  EXPECT_THROW(run_experiment(c), ConfigError);
  c = base;
  c.set("dt", "-1");
  EXPECT_THROW(run_experiment(c), ConfigError);
  c = base;
  c.set("omega_A", "fast");
  EXPECT_THROW(run_experiment(c), ConfigError);
  c = base;
  c.set("integrator", "euler");
  EXPECT_THROW(run_experiment(c), ConfigError);
  auto w = parse_config("kind = wigner-study\nstudy = eigenstates\nalpha = 1\nn = 100\n");
  w.output_dir = base.output_dir;
  EXPECT_THROW(run_experiment(w), ConfigError);
}

TEST(Presets, NamesAndText) {
  const auto names = figure_names();
  ASSERT_EQ(names.size(), 7u);
  EXPECT_EQ(names.front(), "fig3");
  EXPECT_EQ(names.back(), "fig9");
  for (const auto& n : names) EXPECT_NO_THROW(parse_config(preset_text(n)));
  EXPECT_THROW(preset_text("fig10"), UnknownFigure);
  EXPECT_EQ(preset("fig5", "somewhere").output_dir, fs::path("somewhere"));
}

TEST(RunExperiment, TrajectoryManifestMatchesFiles) {
  const auto dir = scratch("fig3");
  const auto r = emit_figure_data("fig3", dir);
  ASSERT_EQ(r.files.size(), 2u);
  const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  EXPECT_EQ(manifest["format"], "qrf-manifest");
  EXPECT_EQ(manifest["version"], 1);
  EXPECT_EQ(manifest["qrf_version"], version());
  EXPECT_EQ(manifest["config"]["kind"], "classical-trajectory");
  ASSERT_EQ(manifest["files"].size(), 2u);
  for (const auto& f : manifest["files"]) {
    const auto text = slurp(dir / f["name"].get<std::string>());
    EXPECT_EQ(f["sha256"], fixture::sha256_hex(text));
    EXPECT_EQ(text.find('\r'), std::string::npos);
    const auto header = text.substr(0, text.find('\n'));
    std::string joined;
    for (const auto& c : f["columns"]) joined += (joined.empty() ? "" : ",") + c.get<std::string>();
    EXPECT_EQ(header, joined);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), f["rows"].get<long>() + 1);
  }
  EXPECT_EQ(slurp(dir / "trajectory.csv").substr(0, 19), "t,x_A,x_B,q_B,q_C\n0");
  // 20 / 1e-3 steps, one row every 10 plus the initial row
  EXPECT_EQ(r.files[0].rows, 2001u);
  bool found = false;
  for (const auto& [k, v] : r.metrics)
    if (k == "max_numeric_deviation") {
      found = true;
      EXPECT_LE(v, 1e-4);
    }
  EXPECT_TRUE(found);
}

TEST(RunExperiment, DeterministicData) {
  const auto a = scratch("det-a"), b = scratch("det-b");
  emit_figure_data("fig7", a);
  emit_figure_data("fig7", b);
  for (const char* name : {"marginal_B.csv", "marginal_C.csv"}) EXPECT_EQ(slurp(a / name), slurp(b / name)) << name;
}

TEST(RunExperiment, SuiteReport) {
  const auto dir = scratch("suite");
  auto c = suite_config(5, dir);
  c.set("states", "4");
  const auto r = run_experiment(c);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.properties.size(), 10u);
  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(report["seed"], 5);
  EXPECT_EQ(report["passed"], true);
  EXPECT_EQ(report["properties"].size(), 10u);
}

TEST(RunExperiment, TrippedGateThrows) {
  auto c = parse_config(preset_text("fig5"));
  c.output_dir = scratch("gate");
  c.set("tolerance", "1e-300");
  EXPECT_THROW(run_experiment(c), NumericalFailure);
}

TEST(Cli, ExitCodes) {
  if (!cli_path()) GTEST_SKIP() << "qrf binary not configured";
  const auto dir = scratch("cli");
  fs::create_directories(dir);
  EXPECT_EQ(run_cli("figure fig3 --out " + (dir / "fig3").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "fig3" / "manifest.json"));
  EXPECT_EQ(run_cli("figure fig10 --out " + (dir / "x").string()), 2);
  EXPECT_EQ(run_cli("run " + (dir / "missing.cfg").string()), 2);
  EXPECT_EQ(run_cli("bogus"), 2);

  std::ofstream(dir / "bad.cfg") << "kind = wigner-study\nstudy = eigenstates\nalpha = -1\n";
  EXPECT_EQ(run_cli("run " + (dir / "bad.cfg").string()), 2);
  std::ofstream(dir / "tight.cfg") << "kind = wigner-study\nstudy = eigenstates\nalpha = 1\ntolerance = 1e-300\n"
                                   << "output_dir = " << (dir / "tight").string() << "\n";
  EXPECT_EQ(run_cli("run " + (dir / "tight.cfg").string()), 3);
  EXPECT_EQ(run_cli("suite --seed 2 --out " + (dir / "suite").string()), 0);
}

TEST(Cli, ThreadCountDoesNotChangeData) {
  if (!cli_path()) GTEST_SKIP() << "qrf binary not configured";
  const auto dir = scratch("threads");
  const char* cli = cli_path();
  for (const char* t : {"1", "3"}) {
    const auto cmd = std::string("QRF_THREADS=") + t + " " + cli + " figure fig9 --out " + (dir / t).string() + " 2>/dev/null";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
  }
  for (const char* name : {"marginal_B.csv", "marginal_C.csv"})
    EXPECT_EQ(slurp(dir / "1" / name), slurp(dir / "3" / name)) << name;
}
