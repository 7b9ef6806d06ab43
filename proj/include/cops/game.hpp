#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cops/graph.hpp"
#include "cops/vertex.hpp"

namespace cops {

enum class Variant { weak, strong };

const char* to_string(Variant v);
Variant parse_variant(const std::string& text);

/// Every parameter named in the negotiation, in commit order.
struct Commitments {
  Variant variant = Variant::weak;
  std::uint32_t k = 0;
  std::optional<std::uint64_t> s_c;
  std::optional<std::uint64_t> rho;
  std::optional<std::uint64_t> s_r;
  std::optional<std::uint64_t> R;
};

struct GameParams {
  std::uint32_t k = 1;
  std::uint64_t s_c = 0;
  std::uint64_t rho = 0;
  std::uint64_t s_r = 0;
  std::uint64_t R = 1;
  Vertex v0;
  Variant variant = Variant::weak;
  std::uint32_t horizon = 200;
  std::uint32_t visit_quota = 100;
  /// Names of the committed parameters in the order they were chosen.
  std::vector<std::string> order;
};

/// Each callback sees every earlier commitment.
struct CopChoices {
  std::uint32_t k = 1;
  std::function<std::uint64_t(const Commitments&)> s_c;
  std::function<std::uint64_t(const Commitments&)> rho;
};

struct RobberChoices {
  std::function<std::uint64_t(const Commitments&)> s_r;
  std::function<std::uint64_t(const Commitments&)> R;
};

struct MatchSettings {
  Vertex v0;
  std::uint32_t horizon = 200;
  std::uint32_t visit_quota = 100;  ///< default is horizon / 2
};

/// Runs the commit sequence of the chosen variant: weak is
/// s_c, rho, s_r, R; strong is s_c, s_r, rho, R.
/// Throws NegotiationError for k = 0, R <= rho, or a zero horizon/quota.
GameParams negotiate(Variant variant, const CopChoices& cops, const RobberChoices& robber,
                     const MatchSettings& settings);

enum class Status { running, captured, robber_survives, horizon_reached, aborted };

const char* to_string(Status s);
Status parse_status(const std::string& text);

struct GameState {
  std::uint32_t round = 0;
  std::vector<Vertex> cops;
  Vertex robber;
  std::uint32_t visits = 0;
  Status status = Status::running;
};

struct RoundRecord {
  std::uint32_t round = 0;
  std::vector<Vertex> cops;  ///< after the cop move (placement in round 0)
  Path robber_path;          ///< empty when the cops captured before the robber moved
  std::uint32_t visits = 0;
  Status status = Status::running;
};

enum class Side { none, cops, robber };

const char* to_string(Side s);
Side parse_side(const std::string& text);

struct Outcome {
  Status status = Status::running;
  std::uint32_t round = 0;  ///< capture round, or the last round played
  std::uint32_t visits = 0;
  Side offender = Side::none;
  std::string reason;  ///< error kind for aborted matches
  std::string detail;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct Trace {
  std::string generator;
  GameParams params;
  /// Free-form annotations echoed in the trace header (strategy names, seeds).
  std::map<std::string, std::string> labels;
  std::vector<RoundRecord> rounds;
  Outcome outcome;
};

/// Read-only view handed to the strategies.
struct MatchView {
  const GraphOracle& graph;
  const GameParams& params;
  const GameState& state;
  const Trace& trace;
};

class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::vector<Vertex> place(const MatchView& view) = 0;
  virtual std::vector<Vertex> move(const MatchView& view) = 0;
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual Vertex place(const MatchView& view) = 0;
  /// A path starting at the robber's vertex; a single vertex means stay.
  virtual Path move(const MatchView& view) = 0;
};

/// True iff every cop moves at most s_c. Cops may coincide.
bool legal_cop_move(const GraphOracle& g, const GameParams& params, const GameState& state,
                    const std::vector<Vertex>& new_positions);

/// Whether v is within rho of some cop.
bool in_capture_zone(const GraphOracle& g, const GameParams& params, const std::vector<Vertex>& cops,
                     const Vertex& v);

/// Moves the robber along `path`, checking every vertex against the capture
/// radius. Throws IllegalMove for a wrong start, a non-edge, or length > s_r.
GameState apply_robber_path(const GraphOracle& g, const GameParams& params, const GameState& state,
                            const Path& path);

struct MatchResult {
  Outcome outcome;
  Trace trace;
};

/// Plays round 0 (cops place, then the robber) and rounds 1..T. Strategy
/// errors and illegal moves abort the match with the offender recorded.
MatchResult run_match(const GraphOracle& g, const GameParams& params, CopStrategy& cops,
                      RobberStrategy& robber);

/// Result of re-checking a trace against the rules.
struct ReplayReport {
  bool ok = true;
  Outcome outcome;  ///< recomputed
  std::vector<std::string> violations;
};

/// Re-checks legality of every round and recomputes visits and the outcome.
/// Aborted matches replay up to the abort point.
ReplayReport replay(const GraphOracle& g, const Trace& trace);

}  // namespace cops
