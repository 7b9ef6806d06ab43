#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cops/baselines.hpp"
#include "cops/game.hpp"

namespace cops {

/// One experiment file. Scalar parameters are used when the matching sweep
/// axis is empty.
struct ExperimentConfig {
  std::string generator = "grid";
  Variant variant = Variant::weak;
  std::uint32_t k = 1;
  std::uint64_t s_c = 1;
  std::uint64_t rho = 1;
  CopStrategyConfig cop;
  std::string robber = "haven";
  std::optional<std::string> robber_start;  ///< encoded vertex, stationary robber only
  std::uint32_t horizon = 200;
  std::optional<std::uint32_t> visit_quota;  ///< defaults to horizon / 2
  std::vector<std::uint64_t> seeds;          ///< multiplies random cops only
  std::vector<std::uint32_t> sweep_k;
  std::vector<std::uint64_t> sweep_s_c;
  std::vector<std::uint64_t> sweep_rho;
  std::vector<CopKind> sweep_cops;
  std::string output = "runs";
};

/// Parses the JSON experiment format. Throws ConfigError with a line number.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& file);

/// Canonical JSON of a config; equal configs give equal strings.
std::string canonical_json(const ExperimentConfig& config);

/// 16 hex digits of FNV-1a over the text.
std::string short_hash(const std::string& text);

/// A fully specified match.
struct MatchConfig {
  std::size_t cell = 0;
  std::string generator;
  Variant variant = Variant::weak;
  std::uint32_t k = 1;
  std::uint64_t s_c = 0;
  std::uint64_t rho = 0;
  CopStrategyConfig cop;
  std::string robber;
  std::optional<std::string> robber_start;
  std::uint32_t horizon = 200;
  std::uint32_t visit_quota = 100;

  std::string canonical() const;
};

/// Cells in order k, s_c, rho, cop kind, seed (seeds only for random cops).
std::vector<MatchConfig> expand(const ExperimentConfig& config);

struct SummaryRow {
  std::string config_hash;
  std::size_t cell = 0;
  std::string generator;
  std::string variant;
  std::uint32_t k = 0;
  std::uint64_t s_c = 0;
  std::uint64_t rho = 0;
  std::string cop;
  std::uint64_t seed = 0;
  std::string robber;
  std::string outcome;
  std::uint32_t round = 0;
  std::uint32_t visits = 0;
  std::uint64_t max_path_length = 0;
  std::optional<std::uint64_t> R_0;
  std::optional<std::uint64_t> s_r;
  std::string reason;
};

struct MatchRun {
  SummaryRow row;
  std::string trace_jsonl;  ///< empty when the match never started
  double wall_seconds = 0;
  bool aborted = false;
  bool rejected = false;
};

/// Runs one match config. Negotiation and precompute failures come back as
/// a rejected row rather than an exception.
MatchRun run_match_config(const MatchConfig& config);

/// Runs every config on an OpenMP worker pool; results are in input order.
std::vector<MatchRun> run_matches(const std::vector<MatchConfig>& configs, int workers = 0);

/// Serial reference for run_matches.
std::vector<MatchRun> run_matches_serial(const std::vector<MatchConfig>& configs);

std::string csv_header();
std::string csv_row(const SummaryRow& row);
std::string summary_csv(const std::vector<MatchRun>& runs);

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitAssertion = 2 };

struct ExperimentResult {
  std::filesystem::path directory;
  std::vector<MatchRun> runs;
  int exit_code = kExitOk;
};

struct RunOptions {
  std::optional<std::filesystem::path> output_root;  ///< overrides config.output
  int workers = 0;                                   ///< 0 = OpenMP default
  bool serial = false;
  bool write_files = true;
};

/// Expands, runs, and writes <root>/<config hash>/summary.csv plus one
/// trace per match under traces/. Wall times go to timing.log.
ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

struct VerifyReport {
  std::size_t traces = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Replays every *.jsonl file under `dir`.
VerifyReport verify_directory(const std::filesystem::path& dir);

}  // namespace cops
