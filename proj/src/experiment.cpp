#include "qrf/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "format.hpp"
#include "json.hpp"
#include "qrf/classical.hpp"
#include "qrf/dirac.hpp"
#include "qrf/dynamics.hpp"
#include "qrf/errors.hpp"
#include "qrf/fixture.hpp"
#include "qrf/frame_switch.hpp"
#include "qrf/observable.hpp"
#include "qrf/states.hpp"
#include "qrf/wigner.hpp"

namespace qrf::experiment {

using json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kKinds = {"classical-trajectory", "wigner-study", "invariant-suite"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Plain decimal numbers, plus multiples of pi: "pi", "pi/2", "0.5*pi", "3*pi/4".
std::optional<double> parse_number(std::string_view s) {
  auto plain = [](std::string_view t) -> std::optional<double> {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  const auto pos = s.find("pi");
  if (pos == std::string_view::npos) return plain(s);
  double factor = 1.0, divisor = 1.0;
  std::string_view head = s.substr(0, pos), tail = s.substr(pos + 2);
  if (!head.empty()) {
    if (head.back() != '*') return std::nullopt;
    auto f = plain(head.substr(0, head.size() - 1));
    if (!f) return std::nullopt;
    factor = *f;
  }
  if (!tail.empty()) {
    if (tail.front() != '/') return std::nullopt;
    auto d = plain(tail.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    divisor = *d;
  }
  return factor * std::numbers::pi / divisor;
}

// Typed access to the kind-specific keys; rejects keys the kind does not use.
class Reader {
 public:
  Reader(const ExperimentConfig& c, std::set<std::string> allowed) : c_(c) {
    for (const auto& [k, v] : c.parameters)
      if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' for kind " + c.kind);
  }

  double number(const std::string& key, std::optional<double> fallback, double lo, double hi) const {
    auto raw = c_.get(key);
    if (!raw) {
      if (!fallback) throw ConfigError("missing required key '" + key + "'");
      return *fallback;
    }
    auto v = parse_number(*raw);
    if (!v) throw ConfigError("key '" + key + "': not a number: " + *raw);
    if (*v < lo || *v > hi) {
      throw ConfigError("key '" + key + "' = " + *raw + " outside [" + detail::format_double(lo) + ", " +
                        detail::format_double(hi) + "]");
    }
    return *v;
  }

  std::size_t integer(const std::string& key, std::size_t fallback, std::size_t lo, std::size_t hi) const {
    auto raw = c_.get(key);
    if (!raw) return fallback;
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), v);
    if (ec != std::errc() || ptr != raw->data() + raw->size()) throw ConfigError("key '" + key + "': not an integer: " + *raw);
    if (v < lo || v > hi) throw ConfigError("key '" + key + "' = " + *raw + " out of range");
    return v;
  }

  std::string choice(const std::string& key, const std::string& fallback, const std::set<std::string>& options) const {
    auto raw = c_.get(key).value_or(fallback);
    if (!options.count(raw)) throw ConfigError("key '" + key + "': unsupported value '" + raw + "'");
    return raw;
  }

 private:
  const ExperimentConfig& c_;
};

struct Writer {
  std::filesystem::path dir;
  RunResult* result;

  void write(const std::string& name, const std::string& content) {
    OutputFile f;
    f.name = name;
    const auto eol = content.find('\n');
    std::string header = content.substr(0, eol);
    std::stringstream ss(header);
    for (std::string col; std::getline(ss, col, ',');) f.columns.push_back(col);
    f.rows = static_cast<std::size_t>(std::count(content.begin(), content.end(), '\n')) - 1;
    f.sha256 = fixture::sha256_hex(content);
    save(name, content);
    result->files.push_back(std::move(f));
  }

  void save(const std::string& name, const std::string& content) const {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + (dir / name).string());
    out << content;
    if (!out) throw ConfigError("failed writing " + (dir / name).string());
  }
};

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns) {
  std::string out;
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (k) out += ',';
    out += header[k];
  }
  out += '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (k) out += ',';
      detail::append_double(out, columns[k][i]);
    }
    out += '\n';
  }
  return out;
}

void gate(bool ok, const std::string& what) {
  if (!ok) throw NumericalFailure(what);
}

// ---- classical-trajectory -------------------------------------------------

void run_classical(const ExperimentConfig& c, Writer& w, RunResult& r) {
  Reader in(c, {"name", "A0", "B0", "omega_A", "omega_B", "phi_A", "phi_B", "m_A", "m_B", "m_C", "t_final",
                "dt", "output_every", "integrator", "tolerance"});
  const double big = 1e12;
  const double omega_A = in.number("omega_A", std::nullopt, 1e-6, 1e4);
  const double omega_B = in.number("omega_B", std::nullopt, 1e-6, 1e4);
  const double A0 = in.number("A0", 1.0, -1e6, 1e6);
  const double B0 = in.number("B0", 1.0, -1e6, 1e6);
  const double phi_A = in.number("phi_A", 0.0, -big, big);
  const double phi_B = in.number("phi_B", 0.0, -big, big);
  const double m_A = in.number("m_A", 1.0, 1e-12, big);
  const double m_B = in.number("m_B", 1.0, 1e-12, big);
  const double m_C = in.number("m_C", 1e9, 1e-12, 1e300);
  const double t_final = in.number("t_final", 20.0, 1e-9, 1e6);
  const double dt = in.number("dt", 1e-3, 1e-9, t_final);
  const std::size_t every = in.integer("output_every", 10, 1, 1u << 30);
  const auto scheme = in.choice("integrator", "yoshida4", {"strang", "yoshida4"}) == "strang"
                          ? classical::Splitting::strang
                          : classical::Splitting::yoshida4;
  const double tolerance = in.number("tolerance", 1e-4, 0.0, big);
  if (t_final / dt > 5e7) throw ConfigError("t_final / dt exceeds 5e7 steps");

  const auto params =
      classical::OscillatorParams::from_frequencies(omega_A, omega_B, A0, B0, phi_A, phi_B, m_A, m_B, m_C);
  const auto start_C = classical::oscillator_initial_state_frame_C(params);
  const auto start_A = classical::classical_frame_switch(start_C, frames::A);
  const auto traj = classical::integrate_reduced(start_A, params.potential(), params.system(), t_final, dt, scheme);
  const auto num_qB = traj.positions(frames::B.index), num_qC = traj.positions(frames::C.index);
  const auto num_pB = traj.momenta(frames::B.index), num_pC = traj.momenta(frames::C.index);

  std::vector<std::vector<double>> ana(5), num(5);
  double identity_dev = 0.0, numeric_dev = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.times[i];
    const auto [xA, xB] = classical::analytic_oscillator_frame_C(params, t);
    const auto [qB, qC] = classical::analytic_oscillator_frame_A(params, t);
    identity_dev = std::max({identity_dev, std::abs(qB - (xB - xA)), std::abs(qC + xA)});
    numeric_dev = std::max({numeric_dev, std::abs(num_qB[i] - qB), std::abs(num_qC[i] - qC)});
    if (i % every != 0) continue;
    for (auto [col, v] : {std::pair{0, t}, {1, xA}, {2, xB}, {3, qB}, {4, qC}}) ana[col].push_back(v);
    for (auto [col, v] : {std::pair{0, t}, {1, num_qB[i]}, {2, num_qC[i]}, {3, num_pB[i]}, {4, num_pC[i]}})
      num[col].push_back(v);
  }
  r.metrics = {{"steps", static_cast<double>(traj.size() - 1)},
               {"max_identity_deviation", identity_dev},
               {"max_numeric_deviation", numeric_dev}};
  gate(identity_dev <= 1e-10, "analytic frame identities violated by " + detail::format_double(identity_dev));
  gate(numeric_dev <= tolerance, "integrator deviates from the analytic solution by " +
                                     detail::format_double(numeric_dev) + " > " + detail::format_double(tolerance));
  w.write("trajectory.csv", csv({"t", "x_A", "x_B", "q_B", "q_C"}, ana));
  w.write("trajectory_numeric.csv", csv({"t", "q_B", "q_C", "p_B", "p_C"}, num));
}

// ---- wigner-study ---------------------------------------------------------

Grid1D read_grid(const Reader& in, double default_length) {
  const std::size_t n = in.integer("n", 128, 8, 2048);
  if ((n & (n - 1)) != 0) throw ConfigError("key 'n' must be a power of two");
  return Grid1D(n, in.number("L", default_length, 1e-3, 1e6));
}

void run_eigenstates(const ExperimentConfig& c, Writer& w, RunResult& r) {
  Reader in(c, {"name", "study", "alpha", "n", "L", "tolerance"});
  const double alpha = in.number("alpha", 1.0, 1e-3, 1e3);
  const Grid1D grid = read_grid(in, 20.0);
  const double tolerance = in.number("tolerance", 1e-6, 0.0, 1e6);
  for (unsigned level : {0u, 1u}) {
    const auto psi = states::ho_state(frames::C, frames::A, grid, level, alpha);
    const auto wg = wigner::wigner_transform(wigner::DensityMatrix::pure(psi));
    const double dev = wigner::max_abs_difference(wg, wigner::closed_form_eigenstate_wigner(level, alpha, wg));
    const std::string tag = "f" + std::to_string(level);
    r.metrics.emplace_back(tag + "_max_deviation", dev);
    r.metrics.emplace_back(tag + "_origin", wg.at(grid.origin_index(), wg.xi.size() / 2));
    r.metrics.emplace_back(tag + "_negativity", wigner::negativity_volume(wg));
    gate(dev <= tolerance, tag + " grid transform deviates from the closed form by " + detail::format_double(dev));
    w.write(tag + ".csv", wigner::to_csv(wg));
  }
}

void run_marginals(const ExperimentConfig& c, Writer& w, RunResult& r) {
  Reader in(c, {"name", "study", "level_A", "level_B", "alpha_A", "alpha_B", "n", "L", "nodes", "tolerance"});
  const auto level_A = static_cast<unsigned>(in.integer("level_A", 0, 0, 1));
  const auto level_B = static_cast<unsigned>(in.integer("level_B", 0, 0, 1));
  const double alpha_A = in.number("alpha_A", 1.0, 1e-3, 1e3);
  const double alpha_B = in.number("alpha_B", 1.0, 1e-3, 1e3);
  const Grid1D grid = read_grid(in, 40.0);
  const std::size_t nodes = in.integer("nodes", 64, 8, 4096);
  const double tolerance = in.number("tolerance", 1e-3, 0.0, 1e6);

  const auto product = states::ho_product(frames::C, frames::A, level_A, alpha_A, frames::B, level_B, alpha_B, grid);
  const auto switched = switch_frame(product, FrameSwitch(frames::C, frames::A));
  const auto joint = wigner::transformed_joint_wigner(level_A, level_B, alpha_A, alpha_B);
  r.metrics.emplace_back("entropy_frame_C", wigner::entanglement_entropy(product, frames::A));
  r.metrics.emplace_back("entropy_frame_A", wigner::entanglement_entropy(switched, frames::B));
  for (FrameLabel keep : {frames::B, frames::C}) {
    const auto traced = wigner::wigner_transform(wigner::partial_trace(switched, keep));
    const auto marginal = wigner::marginal_wigner(joint, keep, traced, nodes);
    const double dev = wigner::max_abs_difference(marginal, traced);
    const std::string tag = "marginal_" + keep.name();
    r.metrics.emplace_back(tag + "_route_deviation", dev);
    r.metrics.emplace_back(tag + "_negativity", wigner::negativity_volume(marginal));
    r.metrics.emplace_back(tag + "_purity", traced.purity());
    gate(dev <= tolerance, tag + ": marginal and partial-trace routes differ by " + detail::format_double(dev));
    w.write(tag + ".csv", wigner::to_csv(marginal));
  }
}

// ---- invariant-suite ------------------------------------------------------

PropertyResult at_most(std::string name, double value, double threshold) {
  return {std::move(name), value <= threshold, value, threshold};
}

PropertyResult at_least(std::string name, double value, double threshold) {
  return {std::move(name), value >= threshold, value, threshold};
}

std::vector<PropertyResult> invariant_suite(std::uint64_t seed, std::size_t count, const Grid1D& grid) {
  std::vector<PropertyResult> out;
  states::RandomStates rs(seed);

  // classical layer
  {
    double rt = 0.0, bracket = 0.0;
    for (std::size_t k = 0; k < 200; ++k) {
      auto rp = classical::ReducedPhasePoint::make(frames::C, 3, {rs.uniform(-5, 5), rs.uniform(-5, 5)},
                                                   {rs.uniform(-5, 5), rs.uniform(-5, 5)});
      auto back = classical::classical_frame_switch(classical::classical_frame_switch(rp, frames::A), frames::C);
      for (std::size_t i = 0; i < 2; ++i)
        rt = std::max({rt, std::abs(back.q[i] - rp.q[i]), std::abs(back.p[i] - rp.p[i])});
    }
    for (std::size_t k = 0; k < 20; ++k) {
      auto rp = classical::ReducedPhasePoint::make(frames::A, 3, {rs.uniform(-3, 3), rs.uniform(-3, 3)},
                                                   {rs.uniform(-3, 3), rs.uniform(-3, 3)});
      const auto x = classical::embed_reduced(rp);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const double want = (i == j ? 1.0 : 0.0) - (j == 0 ? 1.0 : 0.0);
          const double got = classical::dirac_bracket(classical::functions::position(i),
                                                      classical::functions::momentum(j), x, frames::A);
          bracket = std::max(bracket, std::abs(got - want));
        }
    }
    out.push_back(at_most("classical_switch_round_trip", rt, 1e-12));
    out.push_back(at_most("dirac_bracket_table", bracket, 1e-6));
  }

  // quantum switches
  {
    const FrameSwitch comp(frames::C, frames::A), shear(frames::C, frames::A, SwitchBackend::parity_shear);
    const std::array<Observable, 4> lines = {Observable::position(frames::A), Observable::position(frames::B),
                                             Observable::momentum(frames::A), Observable::momentum(frames::B)};
    double drift = 0.0, backend = 1.0, round = 1.0, dict = 0.0, pip = 0.0, wnorm = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      const auto psi = rs.next(frames::C, frames::A, frames::B, grid);
      const auto phi = rs.next(frames::C, frames::A, frames::B, grid);
      const auto a = switch_frame(psi, comp);
      const auto b = switch_frame(psi, shear);
      drift = std::max(drift, std::abs(a.norm() - psi.norm()));
      drift = std::max(drift, std::abs(b.norm() - psi.norm()));
      backend = std::min(backend, fidelity(a, b));
      round = std::min(round, fidelity(switch_frame(a, comp.inverse()), psi));
      for (const auto& o : lines) {
        const double before = expectation(psi, o);
        const double after = expectation(a, conjugate_observable(o, comp));
        dict = std::max(dict, std::abs(before - after));
      }
      const dirac::PhysicalState s1(psi), s2(phi);
      const cplx ref = dirac::physical_inner_product(s1, s2, frames::C);
      for (FrameLabel f : {frames::A, frames::B})
        pip = std::max(pip, std::abs(dirac::physical_inner_product(s1, s2, f) - ref));
      const auto wb = wigner::wigner_transform(wigner::partial_trace(a, frames::B));
      wnorm = std::max(wnorm, std::abs(wb.integral() - 1.0));
    }
    out.push_back(at_most("quantum_switch_norm_drift", drift, 1e-10));
    out.push_back(at_least("backend_fidelity", backend, 1.0 - 1e-8));
    out.push_back(at_least("switch_round_trip_fidelity", round, 1.0 - 1e-10));
    out.push_back(at_most("observable_dictionary", dict, 1e-8));
    out.push_back(at_most("physical_inner_product_forms", pip, 1e-8));
    out.push_back(at_most("reduced_wigner_normalisation", wnorm, 1e-8));
  }

  // entanglement of the switched ground state
  {
    const auto product = states::ho_product(frames::C, frames::A, 0, 1.0, frames::B, 0, 1.0, grid);
    const auto switched = switch_frame(product, FrameSwitch(frames::C, frames::A));
    out.push_back(at_most("product_entropy_frame_C", wigner::entanglement_entropy(product, frames::A), 1e-10));
    out.push_back(at_most("switched_entropy_closed_form",
                          std::abs(wigner::entanglement_entropy(switched, frames::B) -
                                   wigner::switched_ground_entropy(1.0)),
                          1e-6));
  }
  return out;
}

void run_suite(const ExperimentConfig& c, Writer& w, RunResult& r) {
  Reader in(c, {"name", "states", "n", "L"});
  const std::size_t count = in.integer("states", 20, 1, 100000);
  const Grid1D grid = read_grid(in, 20.0);
  r.properties = invariant_suite(c.seed, count, grid);

  json report;
  report["seed"] = c.seed;
  report["states"] = count;
  report["passed"] = r.passed();
  json props = json::array();
  for (const auto& p : r.properties)
    props.push_back({{"name", p.name}, {"passed", p.passed}, {"value", p.value}, {"threshold", p.threshold}});
  report["properties"] = props;
  w.save("report.json", report.dump(2) + "\n");
}

json manifest(const ExperimentConfig& c, const RunResult& r) {
  json m;
  m["format"] = "qrf-manifest";
  m["version"] = 1;
  m["qrf_version"] = version();
  json cfg;
  cfg["kind"] = c.kind;
  cfg["seed"] = c.seed;
  for (const auto& [k, v] : c.parameters) cfg[k] = v;
  m["config"] = cfg;
  json files = json::array();
  for (const auto& f : r.files)
    files.push_back({{"name", f.name}, {"columns", f.columns}, {"rows", f.rows}, {"sha256", f.sha256}});
  m["files"] = files;
  json metrics = json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = v;
  m["metrics"] = metrics;
  if (c.kind == "invariant-suite") {
    m["report"] = "report.json";
    m["passed"] = r.passed();
  }
  m["wall_time_seconds"] = r.wall_seconds;
  return m;
}

}  // namespace

std::optional<std::string> ExperimentConfig::get(std::string_view key) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return v;
  return std::nullopt;
}

void ExperimentConfig::set(std::string_view key, std::string value) {
  for (auto& [k, v] : parameters)
    if (k == key) {
      v = std::move(value);
      return;
    }
  parameters.emplace_back(std::string(key), std::move(value));
}

bool RunResult::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(where + "empty key");
    if (value.empty()) throw ConfigError(where + "empty value for '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError(where + "duplicate key '" + key + "'");
    if (key == "kind") {
      if (!kKinds.count(value)) throw ConfigError(where + "unknown kind '" + value + "'");
      c.kind = value;
    } else if (key == "output_dir") {
      c.output_dir = value;
    } else if (key == "seed") {
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c.seed);
      if (ec != std::errc() || ptr != value.data() + value.size()) throw ConfigError(where + "seed must be a non-negative integer");
    } else {
      c.parameters.emplace_back(key, value);
    }
  }
  if (c.kind.empty()) throw ConfigError("config has no 'kind'");
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

RunResult run_experiment(const ExperimentConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r;
  r.output_dir = config.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) throw ConfigError("cannot create " + config.output_dir.string() + ": " + ec.message());
  Writer w{config.output_dir, &r};

  if (config.kind == "classical-trajectory") {
    run_classical(config, w, r);
  } else if (config.kind == "wigner-study") {
    const std::string study = Reader(config, {"name", "study", "alpha", "n", "L", "tolerance", "level_A", "level_B",
                                              "alpha_A", "alpha_B", "nodes"})
                                  .choice("study", "eigenstates", {"eigenstates", "marginals"});
    if (study == "eigenstates") run_eigenstates(config, w, r);
    else run_marginals(config, w, r);
  } else if (config.kind == "invariant-suite") {
    run_suite(config, w, r);
  } else {
    throw ConfigError("unknown kind '" + config.kind + "'");
  }

  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  w.save("manifest.json", manifest(config, r).dump(2) + "\n");
  if (!r.passed()) {
    std::string failed;
    for (const auto& p : r.properties)
      if (!p.passed) failed += (failed.empty() ? "" : ", ") + p.name;
    throw NumericalFailure("invariant suite failed: " + failed);
  }
  return r;
}

std::vector<std::string> figure_names() { return {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"}; }

std::string preset_text(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> presets = {
      {"fig3",
       "kind = classical-trajectory\nname = fig3\nA0 = 1\nB0 = 1\nomega_A = 1\nomega_B = 10\n"
       "phi_A = 0\nphi_B = pi/2\nt_final = 20\ndt = 1e-3\n"},
      {"fig4",
       "kind = classical-trajectory\nname = fig4\nA0 = 0.3\nB0 = 1\nomega_A = 10\nomega_B = 1\n"
       "phi_A = 0\nphi_B = pi/2\nt_final = 20\ndt = 1e-3\n"},
      {"fig5", "kind = wigner-study\nname = fig5\nstudy = eigenstates\nalpha = 1\nn = 128\nL = 20\n"},
      {"fig6",
       "kind = wigner-study\nname = fig6\nstudy = marginals\nlevel_A = 0\nlevel_B = 0\n"
       "alpha_A = 0.1\nalpha_B = 1\nn = 128\nL = 40\n"},
      {"fig7",
       "kind = wigner-study\nname = fig7\nstudy = marginals\nlevel_A = 0\nlevel_B = 1\n"
       "alpha_A = 1\nalpha_B = 1\nn = 128\nL = 40\n"},
      {"fig8",
       "kind = wigner-study\nname = fig8\nstudy = marginals\nlevel_A = 1\nlevel_B = 0\n"
       "alpha_A = 1\nalpha_B = 1\nn = 128\nL = 40\n"},
      {"fig9",
       "kind = wigner-study\nname = fig9\nstudy = marginals\nlevel_A = 1\nlevel_B = 1\n"
       "alpha_A = 1\nalpha_B = 1\nn = 128\nL = 40\n"},
  };
  auto it = presets.find(name);
  if (it == presets.end()) throw UnknownFigure("unknown figure '" + std::string(name) + "' (expected fig3 .. fig9)");
  return it->second;
}

ExperimentConfig preset(std::string_view name, const std::filesystem::path& output_dir) {
  ExperimentConfig c = parse_config(preset_text(name));
  c.output_dir = output_dir;
  return c;
}

RunResult emit_figure_data(std::string_view name, const std::filesystem::path& output_dir) {
  return run_experiment(preset(name, output_dir));
}

ExperimentConfig suite_config(std::uint64_t seed, const std::filesystem::path& output_dir) {
  ExperimentConfig c = parse_config("kind = invariant-suite\nname = suite\n");
  c.seed = seed;
  c.output_dir = output_dir;
  return c;
}

std::string version() { return QRF_VERSION; }

}  // namespace qrf::experiment
