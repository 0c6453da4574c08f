// qrf run <config> | qrf figure <name> [--out DIR] | qrf suite [--seed N] [--out DIR]
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "qrf/errors.hpp"
#include "qrf/experiment.hpp"
#include "qrf/parallel.hpp"

namespace ex = qrf::experiment;

namespace {

void report(const ex::RunResult& r) {
  std::cerr << "wrote " << r.output_dir.string() << "/manifest.json (" << r.wall_seconds << " s)\n";
  for (const auto& p : r.properties)
    std::cerr << (p.passed ? "  pass  " : "  FAIL  ") << p.name << "  " << p.value << " (limit " << p.threshold
              << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum reference frame experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ex::version());

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("config", config_path, "Config file")->required();

  std::string figure;
  std::string out;
  auto* fig = app.add_subcommand("figure", "Write the data behind one figure");
  fig->add_option("name", figure, "fig3 .. fig9")->required();
  fig->add_option("--out", out, "Output directory (default: the figure name)");

  std::uint64_t seed = 0;
  std::string suite_out = "qrf-suite";
  auto* suite = app.add_subcommand("suite", "Run the invariant suite");
  suite->add_option("--seed", seed, "Seed for the random-state corpus");
  suite->add_option("--out", suite_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cerr, std::cerr);
    return code == 0 ? 0 : 2;
  }

  qrf::parallel::configure_from_environment();
  try {
    if (*run) {
      report(ex::run_experiment(ex::load_config(config_path)));
    } else if (*fig) {
      report(ex::emit_figure_data(figure, out.empty() ? figure : out));
    } else if (*suite) {
      report(ex::run_experiment(ex::suite_config(seed, suite_out)));
    }
  } catch (const qrf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const qrf::UnknownFigure& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const qrf::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const qrf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
