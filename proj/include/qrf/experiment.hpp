#pragma once

// Declarative experiment runs. A config is flat text, one `key = value` per
// line with `#` comments; `kind` selects classical-trajectory, wigner-study or
// invariant-suite. Every run writes its CSV files and a manifest.json into
// output_dir.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qrf::experiment {

struct ExperimentConfig {
  std::string kind;
  /// Kind-specific keys in file order (kind, output_dir and seed excluded).
  std::vector<std::pair<std::string, std::string>> parameters;
  std::filesystem::path output_dir = "qrf-out";
  std::uint64_t seed = 0;

  std::optional<std::string> get(std::string_view key) const;
  /// Adds or replaces a parameter.
  void set(std::string_view key, std::string value);
};

/// Throws ConfigError on malformed lines, duplicate keys, a missing or
/// unknown kind, or a malformed seed. Kind-specific keys are checked by run_experiment.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

struct OutputFile {
  std::string name;
  std::vector<std::string> columns;
  std::size_t rows = 0;  ///< data rows, header excluded
  std::string sha256;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct RunResult {
  std::filesystem::path output_dir;
  std::vector<OutputFile> files;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<PropertyResult> properties;  ///< invariant-suite only
  double wall_seconds = 0.0;

  bool passed() const;
};

/// Validates the kind-specific keys (ConfigError), runs, writes the data files
/// and manifest.json. A tripped invariant gate throws NumericalFailure; for
/// invariant-suite runs the report and manifest are written first.
RunResult run_experiment(const ExperimentConfig& config);

/// fig3 ... fig9.
std::vector<std::string> figure_names();
/// Preset config text for a figure; throws UnknownFigure.
std::string preset_text(std::string_view name);
ExperimentConfig preset(std::string_view name, const std::filesystem::path& output_dir);
RunResult emit_figure_data(std::string_view name, const std::filesystem::path& output_dir);

/// Invariant-suite config with the given seed and output directory.
ExperimentConfig suite_config(std::uint64_t seed, const std::filesystem::path& output_dir);

std::string version();

}  // namespace qrf::experiment
