// copslab: batch runner for coarse cops-and-robber experiments.
//
//   copslab run <config.json> [--output DIR] [--workers N] [--serial]
//   copslab replay <trace.jsonl> [--round N] [--window x0,y0,x1,y1]
//   copslab verify <trace-dir>
//
// COPSLAB_OUTPUT_ROOT overrides the output root, COPSLAB_WORKERS the worker
// count. Exit codes: 0 success, 1 config error, 2 illegal move or failed
// strategy assertion.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cops/errors.hpp"
#include "cops/generators.hpp"
#include "cops/lab.hpp"
#include "cops/render.hpp"
#include "cops/trace.hpp"

namespace {

std::optional<std::string> env(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

int cmd_run(const std::string& config_path, const std::string& output, int workers, bool serial) {
  const cops::ExperimentConfig config = cops::load_config(config_path);
  cops::RunOptions options;
  options.serial = serial;
  options.workers = workers;
  if (auto w = env("COPSLAB_WORKERS"); w && workers == 0) options.workers = std::stoi(*w);
  if (auto root = env("COPSLAB_OUTPUT_ROOT")) options.output_root = *root;
  if (!output.empty()) options.output_root = output;

  const cops::ExperimentResult result = cops::run_experiment(config, options);
  std::size_t survived = 0;
  for (const auto& run : result.runs) {
    if (run.row.outcome == "robber_survives") ++survived;
    if (run.aborted || run.rejected) {
      std::cerr << "cell " << run.row.cell << ": " << run.row.outcome << " (" << run.row.reason << ")\n";
    }
  }
  std::cout << result.runs.size() << " matches, " << survived << " robber_survives\n"
            << "summary: " << (result.directory / "summary.csv").string() << '\n';
  return result.exit_code;
}

int cmd_replay(const std::string& trace_path, std::optional<std::uint32_t> round,
               const std::string& window_text) {
  const cops::Trace trace = cops::load_trace(trace_path);
  const cops::Arena arena = cops::make_arena(trace.generator);
  const cops::ReplayReport report = cops::replay(arena.graph, trace);
  std::cout << "generator " << trace.generator << ", " << trace.rounds.size() << " records, outcome "
            << cops::to_string(trace.outcome.status) << " at round " << trace.outcome.round << ", visits "
            << trace.outcome.visits << '\n';
  for (const auto& v : report.violations) std::cout << "violation: " << v << '\n';

  if (trace.generator == "grid" && !trace.rounds.empty()) {
    const std::uint32_t r = round.value_or(static_cast<std::uint32_t>(trace.rounds.size() - 1));
    const cops::Window w = window_text.empty() ? cops::default_window(trace, r) : cops::parse_window(window_text);
    std::cout << "round " << r << ":\n" << cops::render_snapshot(trace, r, w);
  }
  return report.ok ? cops::kExitOk : cops::kExitAssertion;
}

int cmd_verify(const std::string& dir) {
  const cops::VerifyReport report = cops::verify_directory(dir);
  for (const auto& p : report.problems) std::cout << p << '\n';
  std::cout << report.traces << " traces checked, " << report.problems.size() << " problems\n";
  return report.ok() ? cops::kExitOk : cops::kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarse cops-and-robber experiment runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output;
  int workers = 0;
  bool serial = false;
  auto* run = app.add_subcommand("run", "run every match of an experiment config");
  run->add_option("config", config_path, "experiment config (JSON)")->required();
  run->add_option("--output", output, "output root directory");
  run->add_option("--workers", workers, "worker threads (0 = default)");
  run->add_flag("--serial", serial, "run matches one after another");

  std::string trace_path;
  std::optional<std::uint32_t> round;
  std::string window;
  auto* rep = app.add_subcommand("replay", "re-check a trace and draw a grid snapshot");
  rep->add_option("trace", trace_path, "trace file (JSONL)")->required();
  rep->add_option("--round", round, "round to draw (default: last)");
  rep->add_option("--window", window, "x0,y0,x1,y1");

  std::string dir;
  auto* ver = app.add_subcommand("verify", "re-check legality of every trace in a directory");
  ver->add_option("trace-dir", dir, "directory searched recursively for *.jsonl")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cops::kExitOk : cops::kExitConfig;
  }

  try {
    if (*run) return cmd_run(config_path, output, workers, serial);
    if (*rep) return cmd_replay(trace_path, round, window);
    if (*ver) return cmd_verify(dir);
  } catch (const cops::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cops::kExitConfig;
  } catch (const cops::TraceError& e) {
    std::cerr << "trace error: " << e.what() << '\n';
    return cops::kExitAssertion;
  } catch (const cops::Error& e) {
    std::cerr << e.kind() << ": " << e.what() << '\n';
    return cops::kExitConfig;
  }
  return cops::kExitOk;
}
