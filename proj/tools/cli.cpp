#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <regex>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "triloc/entanglement.hpp"
#include "triloc/error.hpp"
#include "triloc/parallel.hpp"
#include "triloc/presets.hpp"
#include "triloc/report.hpp"
#include "triloc/sweep.hpp"
#include "triloc/validate.hpp"

namespace triloc::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct StateOptions {
  std::string family = "w";
  std::string p = "1";
  std::string theta = "pi/4";
  std::string theta3 = "pi/2";
  std::string file;
};

struct GridOptions {
  std::vector<double> r_values{1.0};
  double delta = 0.0;
  double tau_max = 2.0;
  int steps = 200;
  std::string metrics = "all";
  double measure_interval = 0.0;
};

struct OutputOptions {
  std::string dir = ".";
  std::string format = "csv";
};

double parse_real(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("not a number: " + text);
  return v;
}

StateFamilyParams resolve_state(const StateOptions& o) {
  StateFamilyParams p;
  if (o.family == "w") {
    p.family = StateFamily::W;
  } else if (o.family == "ground") {
    p.family = StateFamily::Ground;
  } else if (o.family == "ghz") {
    p.family = StateFamily::GhzClass;
    p.p = parse_real(o.p);
    p.theta = parse_angle(o.theta);
    p.theta3 = parse_angle(o.theta3);
  } else if (o.family == "custom") {
    p.family = StateFamily::Custom;
    if (o.file.empty()) throw Error(ErrorKind::FileParse, "--family custom requires --file");
    p.file = o.file;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + o.family + "'");
  }
  return p;
}

json state_json(const StateFamilyParams& p) {
  switch (p.family) {
    case StateFamily::W: return {{"family", "w"}};
    case StateFamily::Ground: return {{"family", "ground"}};
    case StateFamily::GhzClass: return {{"family", "ghz"}, {"p", p.p}, {"theta", p.theta}, {"theta3", p.theta3}};
    case StateFamily::Custom: return {{"family", "custom"}, {"file", p.file->string()}};
  }
  return {};
}

void add_optimizer_flags(CLI::App* cmd, OptimizerConfig& cfg) {
  cmd->add_option("--starts", cfg.starts, "Random multistart count")->check(CLI::PositiveNumber);
  cmd->add_option("--coarse-grid", cfg.coarse_grid, "Seeding grid points per angle")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", cfg.max_iters, "Simplex iterations per refinement")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", cfg.tol, "Relative convergence tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "RNG seed");
}

void add_grid_flags(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--r", g.r_values, "Coupling ratio R = Rabi/lambda (repeatable)")->expected(1, -1);
  cmd->add_option("--delta", g.delta, "Detuning in units of lambda");
  cmd->add_option("--tau-max", g.tau_max, "Last time point (tau = lambda t)")->check(CLI::PositiveNumber);
  cmd->add_option("--steps", g.steps, "Number of tau intervals")->check(CLI::PositiveNumber);
  cmd->add_option("--metrics", g.metrics, "Comma list of svetlichny,chsh,pi_tangle,survival or all");
}

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--output,-o", o.dir, "Output directory");
  cmd->add_option("--format", o.format, "csv (plus JSON sidecar) or json")->check(CLI::IsMember({"csv", "json"}));
}

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

json sidecar(const std::string& command, json config, const OptimizerConfig& cfg, double seconds) {
  return {{"tool", "triloc"},
          {"version", TRILOC_VERSION},
          {"command", command},
          {"config", std::move(config)},
          {"seed", cfg.seed},
          {"wall_clock_seconds", seconds},
          {"threads", worker_count()}};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_compute(const StateOptions& so, const OptimizerConfig& cfg, const std::string& output, std::ostream& out,
                std::ostream& err) {
  const auto params = resolve_state(so);
  std::string warning;
  const auto rho = make_state(params, &warning);
  if (!warning.empty()) err << "warning: " << warning << '\n';

  json report = {{"state", state_json(params)}, {"optimizer", to_json(cfg)}, {"seed", cfg.seed}};
  if (!warning.empty()) report["warning"] = warning;
  if (rho.dim() == 8) {
    const auto t = correlation_tensor(rho);
    const auto s = svetlichny_max(t, cfg);
    const auto pi = pi_tangle(rho);
    report["s_svetlichny"] = s.value;
    report["s_bound"] = upper_bound(t);
    report["svetlichny"] = to_json(s);
    report["chsh"] = {{"ab", chsh_max(partial_trace(rho, {Qubit::A, Qubit::B}))},
                      {"ac", chsh_max(partial_trace(rho, {Qubit::A, Qubit::C}))},
                      {"bc", chsh_max(partial_trace(rho, {Qubit::B, Qubit::C}))}};
    report["chsh_ab"] = report["chsh"]["ab"];
    report["pi_tangle"] = pi.pi_abc;
    report["pi_tangle_breakdown"] = to_json(pi);
  } else if (rho.dim() == 4) {
    report["chsh_ab"] = chsh_max(rho);
    report["negativity"] = negativity(rho, Qubit::A);
  } else {
    throw Error(ErrorKind::DimensionMismatch, "compute needs a two- or three-qubit state");
  }
  out << report.dump(2) << '\n';
  if (!output.empty()) {
    fs::create_directories(output);
    open_for_write(fs::path(output) / "compute.json") << report.dump(2) << '\n';
  }
  return kOk;
}

int cmd_sweep(const std::string& command, const GridOptions& g, bool zeno, const OptimizerConfig& cfg,
              const OutputOptions& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepSpec spec;
  spec.r_values = g.r_values;
  spec.delta = g.delta;
  spec.taus = linspace(0.0, g.tau_max, g.steps + 1);
  spec.metrics = parse_metrics(g.metrics);
  spec.optimizer = cfg;
  if (zeno) spec.schedule = ZenoSchedule::every(g.measure_interval);
  const auto rows = sweep(spec);

  json config = {{"r", g.r_values},         {"delta", g.delta},   {"tau_max", g.tau_max},
                 {"steps", g.steps},        {"metrics", g.metrics}, {"schedule", to_json(spec.schedule)},
                 {"optimizer", to_json(cfg)}, {"format", o.format}};
  fs::create_directories(o.dir);
  json meta = sidecar(command, std::move(config), cfg, 0.0);
  meta["rows"] = rows.size();
  meta["error_rows"] = error_count(rows);

  const fs::path base = fs::path(o.dir) / command;
  if (o.format == "csv") {
    auto csv = open_for_write(base.string() + ".csv");
    write_sweep_csv(csv, rows);
    meta["files"] = {command + ".csv"};
    meta["wall_clock_seconds"] = seconds_since(t0);
    open_for_write(base.string() + ".json") << meta.dump(2) << '\n';
  } else {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    meta["data"] = std::move(arr);
    meta["wall_clock_seconds"] = seconds_since(t0);
    open_for_write(base.string() + ".json") << meta.dump(2) << '\n';
  }
  out << "wrote " << rows.size() << " rows (" << error_count(rows) << " with errors) to " << base.string() << '.'
      << o.format << '\n';
  return kOk;
}

int cmd_table1(const OptimizerConfig& cfg, const std::string& dir, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  fs::create_directories(dir);
  auto csv = open_for_write(fs::path(dir) / "table1.csv");
  csv << "p,theta,theta3,s_svetlichny,s_bound\n";
  json rows = json::array();
  for (const auto& row : table1_rows()) {
    const auto t = correlation_tensor(ghz_class(row.p, row.theta, row.theta3));
    const double s = svetlichny_max(t, cfg).value;
    const double b = upper_bound(t);
    csv << format_number(row.p) << ',' << format_number(row.theta) << ',' << format_number(row.theta3) << ','
        << format_number(s) << ',' << format_number(b) << '\n';
    rows.push_back({{"p", row.p}, {"theta", row.theta}, {"theta3", row.theta3}, {"s_svetlichny", s}, {"s_bound", b}});
  }
  json meta = sidecar("figure", {{"name", "table1"}, {"optimizer", to_json(cfg)}}, cfg, seconds_since(t0));
  meta["files"] = {"table1.csv"};
  meta["rows"] = rows;
  meta["error_rows"] = 0;
  open_for_write(fs::path(dir) / "table1.json") << meta.dump(2) << '\n';
  out << "wrote " << (fs::path(dir) / "table1.csv").string() << '\n';
  return kOk;
}

int cmd_figure(const std::string& name, const OptimizerConfig& cfg, const std::string& dir, std::ostream& out,
               std::ostream& err) {
  if (name == "table1") return cmd_table1(cfg, dir, out);
  const auto preset = figure_preset(name);
  if (!preset) {
    err << "unknown figure preset '" << name << "' (known:";
    for (const auto& n : preset_names()) err << ' ' << n;
    err << ")\n";
    return kUnknownPreset;
  }
  const auto t0 = std::chrono::steady_clock::now();
  fs::create_directories(dir);
  json files = json::array();
  std::size_t errors = 0;
  for (const auto& series : preset->series) {
    SweepSpec spec;
    spec.r_values = series.r_values;
    spec.taus = linspace(0.0, series.tau_max, series.points);
    spec.schedule = series.schedule;
    spec.metrics = series.metrics;
    spec.optimizer = cfg;
    const auto rows = sweep(spec);
    errors += error_count(rows);
    auto csv = open_for_write(fs::path(dir) / (series.file_stem + ".csv"));
    write_sweep_csv(csv, rows);
    files.push_back({{"file", series.file_stem + ".csv"},
                     {"label", series.label},
                     {"r", series.r_values},
                     {"tau_max", series.tau_max},
                     {"points", series.points},
                     {"schedule", to_json(series.schedule)}});
    out << "wrote " << series.file_stem << ".csv (" << rows.size() << " rows)\n";
  }
  json meta = sidecar("figure", {{"name", name}, {"description", preset->description}, {"optimizer", to_json(cfg)}}, cfg,
                      seconds_since(t0));
  meta["files"] = files;
  meta["error_rows"] = errors;
  open_for_write(fs::path(dir) / (name + ".json")) << meta.dump(2) << '\n';
  return kOk;
}

int cmd_validate(const ValidateOptions& opts, std::ostream& out) {
  const auto checks = run_golden_suite(opts);
  const json summary = to_json(checks);
  out << summary.dump(2) << '\n';
  return summary["passed"].get<bool>() ? kOk : kValidationFailed;
}

}  // namespace

double parse_angle(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text += c;
  // [sign][coef][*]pi[/den]
  static const std::regex pi_form(R"(^([+-]?)(\d+(?:\.\d*)?)?\*?pi(?:/(\d+(?:\.\d*)?))?$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double v = std::numbers::pi;
    if (m[2].matched) v *= std::stod(m[2].str());
    if (m[3].matched) {
      const double den = std::stod(m[3].str());
      if (den == 0.0) throw std::invalid_argument("zero denominator in angle: " + raw);
      v /= den;
    }
    return m[1].str() == "-" ? -v : v;
  }
  try {
    return parse_real(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse angle: " + raw);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tripartite nonlocality, entanglement and Zeno dynamics for three-qubit states", "triloc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(TRILOC_VERSION));

  StateOptions state;
  OptimizerConfig cfg;
  GridOptions grid;
  OutputOptions output;
  std::string compute_output;
  std::string figure_name;
  ValidateOptions vopts;

  auto* compute = app.add_subcommand("compute", "Metrics for a single state (JSON on stdout)");
  compute->add_option("--family", state.family, "w | ghz | ground | custom")->check(CLI::IsMember({"w", "ghz", "ground", "custom"}));
  compute->add_option("--p", state.p, "GHZ-class mixing weight");
  compute->add_option("--theta", state.theta, "GHZ-class theta (radians or pi/3 style)");
  compute->add_option("--theta3", state.theta3, "GHZ-class theta3");
  compute->add_option("--file", state.file, "Custom density matrix (JSON with dim, re, im)");
  compute->add_option("--output,-o", compute_output, "Also write compute.json into this directory");
  add_optimizer_flags(compute, cfg);

  auto* dynamics = app.add_subcommand("dynamics", "Free decay of the W state in a Lorentzian reservoir");
  add_grid_flags(dynamics, grid);
  add_optimizer_flags(dynamics, cfg);
  add_output_flags(dynamics, output);

  auto* zeno = app.add_subcommand("zeno", "Decay under repeated measurement");
  add_grid_flags(zeno, grid);
  zeno->add_option("--measure-interval", grid.measure_interval, "Measurement spacing lambda T")
      ->required()
      ->check(CLI::PositiveNumber);
  add_optimizer_flags(zeno, cfg);
  add_output_flags(zeno, output);

  auto* figure = app.add_subcommand("figure", "Reproduce a figure or the GHZ-class table as CSV + JSON");
  figure->add_option("name", figure_name, "fig1..fig5 or table1")->required();
  figure->add_option("--output,-o", output.dir, "Output directory");
  add_optimizer_flags(figure, cfg);

  auto* validate_cmd = app.add_subcommand("validate", "Run the golden-value suite");
  validate_cmd->add_flag("--perturb-bound", vopts.perturb_bound, "Negative control: wrong bound matricization");
  validate_cmd->add_option("--random-states", vopts.random_states, "Random states for the bound check")->check(CLI::NonNegativeNumber);
  add_optimizer_flags(validate_cmd, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*compute) return cmd_compute(state, cfg, compute_output, out, err);
    if (*dynamics) return cmd_sweep("dynamics", grid, false, cfg, output, out);
    if (*zeno) return cmd_sweep("zeno", grid, true, cfg, output, out);
    if (*figure) return cmd_figure(figure_name, cfg, output.dir, out, err);
    if (*validate_cmd) {
      vopts.optimizer = cfg;
      return cmd_validate(vopts, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace triloc::cli
