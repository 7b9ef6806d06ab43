#include "cops/lab.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "cops/errors.hpp"
#include "cops/generators.hpp"
#include "cops/haven.hpp"
#include "cops/trace.hpp"

namespace cops {
namespace {

using nlohmann::json;

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::size_t line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

[[noreturn]] void config_fail(const std::string& text, const std::string& key, const std::string& what) {
  const std::size_t line = line_of_key(text, key);
  std::string where = line ? "line " + std::to_string(line) + ": " : "";
  throw ConfigError(where + "'" + key + "': " + what);
}

template <typename T>
T get_as(const std::string& text, const json& obj, const std::string& key) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    config_fail(text, key, e.what());
  }
}

void reject_unknown(const std::string& text, const json& obj, const std::set<std::string>& known) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.contains(key)) config_fail(text, key, "unknown key");
  }
}

CopStrategyConfig parse_cop(const std::string& text, const json& j) {
  CopStrategyConfig c;
  if (!j.is_object()) config_fail(text, "cop", "expected an object");
  reject_unknown(text, j, {"kind", "seed", "perimeter_radius", "start_radius"});
  if (j.contains("kind")) {
    try {
      c.kind = parse_cop_kind(get_as<std::string>(text, j, "kind"));
    } catch (const ConfigError& e) {
      config_fail(text, "kind", e.what());
    }
  }
  if (j.contains("seed")) c.seed = get_as<std::uint64_t>(text, j, "seed");
  if (j.contains("perimeter_radius") && !j.at("perimeter_radius").is_null()) {
    c.perimeter_radius = get_as<std::uint64_t>(text, j, "perimeter_radius");
  }
  if (j.contains("start_radius")) c.start_radius = get_as<std::uint64_t>(text, j, "start_radius");
  return c;
}

json cop_json(const CopStrategyConfig& c) {
  json j{{"kind", to_string(c.kind)}, {"seed", c.seed}, {"start_radius", c.start_radius}};
  j["perimeter_radius"] = c.perimeter_radius ? json(*c.perimeter_radius) : json(nullptr);
  return j;
}

class StationaryRobber final : public RobberStrategy {
 public:
  explicit StationaryRobber(Vertex start) : start_(std::move(start)) {}
  Vertex place(const MatchView&) override { return start_; }
  Path move(const MatchView& view) override { return {view.state.robber}; }

 private:
  Vertex start_;
};

SummaryRow base_row(const MatchConfig& c) {
  SummaryRow r;
  r.config_hash = short_hash(c.canonical());
  r.cell = c.cell;
  r.generator = c.generator;
  r.variant = to_string(c.variant);
  r.k = c.k;
  r.s_c = c.s_c;
  r.rho = c.rho;
  r.cop = to_string(c.cop.kind);
  r.seed = c.cop.seed;
  r.robber = c.robber;
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("line " + std::to_string(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)) +
                      ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("line 1: experiment config must be a JSON object");
  reject_unknown(text, j,
                 {"generator", "variant", "k", "s_c", "rho", "cop", "robber", "robber_start", "horizon",
                  "visit_quota", "seeds", "sweep", "output"});

  ExperimentConfig c;
  if (j.contains("generator")) c.generator = get_as<std::string>(text, j, "generator");
  const auto ids = generator_ids();
  if (std::find(ids.begin(), ids.end(), c.generator) == ids.end()) {
    config_fail(text, "generator", "unsupported generator '" + c.generator + "'");
  }
  if (j.contains("variant")) {
    try {
      c.variant = parse_variant(get_as<std::string>(text, j, "variant"));
    } catch (const ConfigError& e) {
      config_fail(text, "variant", e.what());
    }
  }
  if (j.contains("k")) c.k = get_as<std::uint32_t>(text, j, "k");
  if (j.contains("s_c")) c.s_c = get_as<std::uint64_t>(text, j, "s_c");
  if (j.contains("rho")) c.rho = get_as<std::uint64_t>(text, j, "rho");
  if (j.contains("cop")) c.cop = parse_cop(text, j.at("cop"));
  if (j.contains("robber")) c.robber = get_as<std::string>(text, j, "robber");
  if (c.robber != "haven" && c.robber != "stationary") {
    config_fail(text, "robber", "unsupported robber strategy '" + c.robber + "'");
  }
  if (j.contains("robber_start")) c.robber_start = get_as<std::string>(text, j, "robber_start");
  if (j.contains("horizon")) c.horizon = get_as<std::uint32_t>(text, j, "horizon");
  if (c.horizon == 0) config_fail(text, "horizon", "must be positive");
  if (j.contains("visit_quota")) c.visit_quota = get_as<std::uint32_t>(text, j, "visit_quota");
  if (j.contains("seeds")) c.seeds = get_as<std::vector<std::uint64_t>>(text, j, "seeds");
  if (j.contains("output")) c.output = get_as<std::string>(text, j, "output");
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    if (!s.is_object()) config_fail(text, "sweep", "expected an object");
    reject_unknown(text, s, {"k", "s_c", "rho", "cop_kinds"});
    if (s.contains("k")) c.sweep_k = get_as<std::vector<std::uint32_t>>(text, s, "k");
    if (s.contains("s_c")) c.sweep_s_c = get_as<std::vector<std::uint64_t>>(text, s, "s_c");
    if (s.contains("rho")) c.sweep_rho = get_as<std::vector<std::uint64_t>>(text, s, "rho");
    if (s.contains("cop_kinds")) {
      for (const auto& name : get_as<std::vector<std::string>>(text, s, "cop_kinds")) {
        try {
          c.sweep_cops.push_back(parse_cop_kind(name));
        } catch (const ConfigError& e) {
          config_fail(text, "cop_kinds", e.what());
        }
      }
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string canonical_json(const ExperimentConfig& c) {
  json j{{"generator", c.generator},
         {"variant", to_string(c.variant)},
         {"k", c.k},
         {"s_c", c.s_c},
         {"rho", c.rho},
         {"cop", cop_json(c.cop)},
         {"robber", c.robber},
         {"horizon", c.horizon},
         {"seeds", c.seeds},
         {"output", c.output}};
  j["robber_start"] = c.robber_start ? json(*c.robber_start) : json(nullptr);
  j["visit_quota"] = c.visit_quota ? json(*c.visit_quota) : json(nullptr);
  json kinds = json::array();
  for (auto kind : c.sweep_cops) kinds.push_back(to_string(kind));
  j["sweep"] = json{{"k", c.sweep_k}, {"s_c", c.sweep_s_c}, {"rho", c.sweep_rho}, {"cop_kinds", kinds}};
  return j.dump();
}

std::string short_hash(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string MatchConfig::canonical() const {
  json j{{"cell", cell},   {"generator", generator}, {"variant", to_string(variant)},
         {"k", k},         {"s_c", s_c},             {"rho", rho},
         {"cop", cop_json(cop)}, {"robber", robber}, {"horizon", horizon},
         {"visit_quota", visit_quota}};
  j["robber_start"] = robber_start ? json(*robber_start) : json(nullptr);
  return j.dump();
}

std::vector<MatchConfig> expand(const ExperimentConfig& config) {
  const std::vector<std::uint32_t> ks = config.sweep_k.empty() ? std::vector{config.k} : config.sweep_k;
  const std::vector<std::uint64_t> scs = config.sweep_s_c.empty() ? std::vector{config.s_c} : config.sweep_s_c;
  const std::vector<std::uint64_t> rhos = config.sweep_rho.empty() ? std::vector{config.rho} : config.sweep_rho;
  const std::vector<CopKind> kinds = config.sweep_cops.empty() ? std::vector{config.cop.kind} : config.sweep_cops;
  const std::vector<std::uint64_t> seeds = config.seeds.empty() ? std::vector{config.cop.seed} : config.seeds;

  std::vector<MatchConfig> out;
  for (auto k : ks) {
    for (auto s_c : scs) {
      for (auto rho : rhos) {
        for (auto kind : kinds) {
          const std::vector<std::uint64_t> cell_seeds =
              kind == CopKind::random ? seeds : std::vector{config.cop.seed};
          for (auto seed : cell_seeds) {
            MatchConfig m;
            m.cell = out.size();
            m.generator = config.generator;
            m.variant = config.variant;
            m.k = k;
            m.s_c = s_c;
            m.rho = rho;
            m.cop = config.cop;
            m.cop.kind = kind;
            m.cop.seed = seed;
            m.robber = config.robber;
            m.robber_start = config.robber_start;
            m.horizon = config.horizon;
            m.visit_quota = config.visit_quota.value_or(std::max<std::uint32_t>(1, config.horizon / 2));
            out.push_back(std::move(m));
          }
        }
      }
    }
  }
  return out;
}

MatchRun run_match_config(const MatchConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  MatchRun run;
  run.row = base_row(config);
  auto reject = [&](const Error& e) {
    run.rejected = true;
    run.row.outcome = "rejected";
    run.row.reason = e.kind();
  };

  try {
    const Arena arena = make_arena(config.generator);
    const GraphOracle& g = arena.graph;
    CopChoices cops_choice;
    cops_choice.k = config.k;
    cops_choice.s_c = [&](const Commitments&) { return config.s_c; };
    cops_choice.rho = [&](const Commitments&) { return config.rho; };
    const MatchSettings settings{g.root(), config.horizon, config.visit_quota};

    GameParams params;
    std::unique_ptr<RobberStrategy> robber;
    if (config.robber == "haven") {
      HavenNegotiator negotiator(arena);
      params = negotiate(config.variant, cops_choice, negotiator.choices(), settings);
      run.row.R_0 = negotiator.tables()->R_declared;
      run.row.s_r = negotiator.tables()->s_r;
      robber = std::make_unique<HavenRobber>(negotiator.tables());
    } else if (config.robber == "stationary") {
      RobberChoices rc;
      rc.s_r = [](const Commitments&) { return std::uint64_t{0}; };
      rc.R = [](const Commitments& c) { return *c.rho + 1; };
      params = negotiate(config.variant, cops_choice, rc, settings);
      Vertex start = g.root();
      if (config.robber_start) {
        auto v = g.decode(*config.robber_start);
        if (!v) throw ConfigError("cannot decode robber_start '" + *config.robber_start + "'");
        start = *v;
      }
      robber = std::make_unique<StationaryRobber>(start);
    } else {
      throw ConfigError("unsupported robber strategy '" + config.robber + "'");
    }

    auto cops = make_cop_strategy(config.cop);
    MatchResult result = run_match(g, params, *cops, *robber);
    result.trace.labels = {{"cell", std::to_string(config.cell)},
                           {"config_hash", run.row.config_hash},
                           {"cop", to_string(config.cop.kind)},
                           {"seed", std::to_string(config.cop.seed)},
                           {"robber", config.robber}};
    const Outcome& o = result.outcome;
    run.row.outcome = to_string(o.status);
    run.row.round = o.round;
    run.row.visits = o.visits;
    run.row.reason = o.reason;
    for (const auto& rec : result.trace.rounds) {
      if (rec.round > 0) run.row.max_path_length = std::max<std::uint64_t>(run.row.max_path_length, path_length(rec.robber_path));
    }
    run.aborted = o.status == Status::aborted;
    run.trace_jsonl = to_jsonl(g, result.trace);
  } catch (const Error& e) {
    reject(e);
  }
  run.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return run;
}

std::vector<MatchRun> run_matches(const std::vector<MatchConfig>& configs, int workers) {
  std::vector<MatchRun> out(configs.size());
  const auto n = static_cast<std::int64_t>(configs.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_match_config(configs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(cops_run_matches)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<MatchRun> run_matches_serial(const std::vector<MatchConfig>& configs) {
  std::vector<MatchRun> out;
  out.reserve(configs.size());
  for (const auto& c : configs) out.push_back(run_match_config(c));
  return out;
}

std::string csv_header() {
  return "config_hash,cell,generator,variant,k,s_c,rho,cop,seed,robber,outcome,round,visits,"
         "max_path_length,R_0,s_r,reason";
}

std::string csv_row(const SummaryRow& r) {
  std::ostringstream out;
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  out << r.config_hash << ',' << r.cell << ',' << csv_escape(r.generator) << ',' << r.variant << ','
      << r.k << ',' << r.s_c << ',' << r.rho << ',' << r.cop << ',' << r.seed << ','
      << csv_escape(r.robber) << ',' << r.outcome << ',' << r.round << ',' << r.visits << ','
      << r.max_path_length << ',' << opt(r.R_0) << ',' << opt(r.s_r) << ',' << csv_escape(r.reason);
  return out.str();
}

std::string summary_csv(const std::vector<MatchRun>& runs) {
  std::string out = csv_header() + '\n';
  for (const auto& run : runs) out += csv_row(run.row) + '\n';
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  const auto configs = expand(config);
  ExperimentResult result;
  result.runs = options.serial ? run_matches_serial(configs) : run_matches(configs, options.workers);

  for (const auto& run : result.runs) {
    if (run.aborted) result.exit_code = kExitAssertion;
  }
  if (result.exit_code == kExitOk) {
    for (const auto& run : result.runs) {
      if (run.rejected) result.exit_code = kExitConfig;
    }
  }
  if (!options.write_files) return result;

  const std::filesystem::path root = options.output_root.value_or(config.output);
  result.directory = root / short_hash(canonical_json(config));
  std::filesystem::create_directories(result.directory / "traces");
  {
    std::ofstream csv(result.directory / "summary.csv", std::ios::binary);
    csv << summary_csv(result.runs);
  }
  std::ofstream timing(result.directory / "timing.log");
  for (const auto& run : result.runs) {
    char name[32];
    std::snprintf(name, sizeof name, "match_%04zu.jsonl", run.row.cell);
    if (!run.trace_jsonl.empty()) {
      std::ofstream trace(result.directory / "traces" / name, std::ios::binary);
      trace << run.trace_jsonl;
    }
    timing << name << ' ' << std::fixed << std::setprecision(6) << run.wall_seconds << '\n';
  }
  return result;
}

VerifyReport verify_directory(const std::filesystem::path& dir) {
  VerifyReport report;
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) {
    report.problems.push_back(dir.string() + ": not a directory");
    return report;
  }
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    ++report.traces;
    try {
      const Trace trace = load_trace(file);
      const Arena arena = make_arena(trace.generator);
      const ReplayReport replayed = replay(arena.graph, trace);
      for (const auto& v : replayed.violations) report.problems.push_back(file.string() + ": " + v);
      if (trace.outcome.status == Status::aborted) {
        report.problems.push_back(file.string() + ": match aborted (" + trace.outcome.reason + ")");
      }
    } catch (const Error& e) {
      report.problems.push_back(file.string() + ": " + e.what());
    }
  }
  return report;
}

}  // namespace cops
