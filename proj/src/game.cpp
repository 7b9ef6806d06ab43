#include "cops/game.hpp"

#include <algorithm>

#include "cops/errors.hpp"
#include "cops/search.hpp"

namespace cops {

const char* to_string(Variant v) { return v == Variant::weak ? "weak" : "strong"; }

Variant parse_variant(const std::string& text) {
  if (text == "weak") return Variant::weak;
  if (text == "strong") return Variant::strong;
  throw ConfigError("unknown variant '" + text + "'");
}

const char* to_string(Status s) {
  switch (s) {
    case Status::running: return "running";
    case Status::captured: return "captured";
    case Status::robber_survives: return "robber_survives";
    case Status::horizon_reached: return "horizon_reached";
    case Status::aborted: return "aborted";
  }
  return "?";
}

Status parse_status(const std::string& text) {
  for (Status s : {Status::running, Status::captured, Status::robber_survives,
                   Status::horizon_reached, Status::aborted}) {
    if (text == to_string(s)) return s;
  }
  throw TraceError("unknown status '" + text + "'");
}

const char* to_string(Side s) {
  switch (s) {
    case Side::none: return "none";
    case Side::cops: return "cops";
    case Side::robber: return "robber";
  }
  return "?";
}

Side parse_side(const std::string& text) {
  for (Side s : {Side::none, Side::cops, Side::robber}) {
    if (text == to_string(s)) return s;
  }
  throw TraceError("unknown side '" + text + "'");
}

GameParams negotiate(Variant variant, const CopChoices& cops, const RobberChoices& robber,
                     const MatchSettings& settings) {
  if (cops.k == 0) throw NegotiationError("at least one cop is required");
  if (!cops.s_c || !cops.rho || !robber.s_r || !robber.R) {
    throw NegotiationError("every parameter needs a choice callback");
  }
  if (settings.horizon == 0 || settings.visit_quota == 0) {
    throw NegotiationError("horizon and visit quota must be positive");
  }

  Commitments c;
  c.variant = variant;
  c.k = cops.k;
  GameParams params;
  params.variant = variant;
  params.k = cops.k;
  params.v0 = settings.v0;
  params.horizon = settings.horizon;
  params.visit_quota = settings.visit_quota;

  auto commit = [&](const char* name, std::optional<std::uint64_t>& slot,
                    const std::function<std::uint64_t(const Commitments&)>& choose) {
    slot = choose(c);
    params.order.emplace_back(name);
  };
  commit("s_c", c.s_c, cops.s_c);
  if (variant == Variant::weak) {
    commit("rho", c.rho, cops.rho);
    commit("s_r", c.s_r, robber.s_r);
  } else {
    commit("s_r", c.s_r, robber.s_r);
    commit("rho", c.rho, cops.rho);
  }
  commit("R", c.R, robber.R);

  params.s_c = *c.s_c;
  params.rho = *c.rho;
  params.s_r = *c.s_r;
  params.R = *c.R;
  if (params.R <= params.rho) {
    throw NegotiationError("robber reach R = " + std::to_string(params.R) +
                           " must exceed the capture radius " + std::to_string(params.rho));
  }
  return params;
}

bool legal_cop_move(const GraphOracle& g, const GameParams& params, const GameState& state,
                    const std::vector<Vertex>& new_positions) {
  if (new_positions.size() != params.k || state.cops.size() != params.k) return false;
  for (std::size_t j = 0; j < new_positions.size(); ++j) {
    if (!within(g, state.cops[j], new_positions[j], params.s_c)) return false;
  }
  return true;
}

bool in_capture_zone(const GraphOracle& g, const GameParams& params, const std::vector<Vertex>& cops,
                     const Vertex& v) {
  return std::any_of(cops.begin(), cops.end(),
                     [&](const Vertex& c) { return within(g, c, v, params.rho); });
}

GameState apply_robber_path(const GraphOracle& g, const GameParams& params, const GameState& state,
                            const Path& path) {
  if (path.empty() || path.front() != state.robber) {
    throw IllegalMove("robber path must start at the robber's vertex");
  }
  if (path_length(path) > params.s_r) {
    throw IllegalMove("robber path of length " + std::to_string(path_length(path)) +
                      " exceeds speed " + std::to_string(params.s_r));
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.adjacent(path[i - 1], path[i])) {
      throw IllegalMove("robber path steps between non-adjacent vertices " + g.encode(path[i - 1]) +
                        " and " + g.encode(path[i]));
    }
  }

  GameState next = state;
  for (const auto& v : path) {
    if (in_capture_zone(g, params, state.cops, v)) {
      next.robber = v;
      next.status = Status::captured;
      return next;
    }
  }
  next.robber = path.back();
  if (within(g, params.v0, next.robber, params.R)) ++next.visits;
  return next;
}

namespace {

class Match {
 public:
  Match(const GraphOracle& g, const GameParams& params, CopStrategy& cops, RobberStrategy& robber)
      : g_(g), params_(params), cops_(cops), robber_(robber), view_{g, params, state_, trace_} {
    trace_.generator = g.id();
    trace_.params = params;
  }

  MatchResult run() {
    if (!place()) return finish();
    for (std::uint32_t r = 1; r <= params_.horizon; ++r) {
      state_.round = r;
      if (!play_round()) return finish();
    }
    state_.status = state_.visits >= params_.visit_quota ? Status::robber_survives
                                                         : Status::horizon_reached;
    outcome_.status = state_.status;
    outcome_.round = params_.horizon;
    return finish();
  }

 private:
  template <typename F>
  bool guarded(Side side, F&& step) {
    try {
      step();
      return true;
    } catch (const Error& e) {
      abort(side, e.kind(), e.what());
    } catch (const std::exception& e) {
      abort(side, "exception", e.what());
    }
    return false;
  }

  void abort(Side side, const char* kind, const std::string& detail) {
    state_.status = Status::aborted;
    outcome_.status = Status::aborted;
    outcome_.round = state_.round;
    outcome_.offender = side;
    outcome_.reason = kind;
    outcome_.detail = detail;
  }

  void capture() {
    state_.status = Status::captured;
    outcome_.status = Status::captured;
    outcome_.round = state_.round;
  }

  bool place() {
    std::vector<Vertex> cops;
    if (!guarded(Side::cops, [&] { cops = cops_.place(view_); })) return false;
    if (cops.size() != params_.k) {
      abort(Side::cops, "illegal_move", "wrong number of cops placed");
      return false;
    }
    state_.cops = std::move(cops);
    Vertex start;
    if (!guarded(Side::robber, [&] { start = robber_.place(view_); })) return false;
    state_.robber = start;
    const bool caught = in_capture_zone(g_, params_, state_.cops, start);
    if (caught) capture();
    trace_.rounds.push_back({0, state_.cops, {start}, 0, state_.status});
    return !caught;
  }

  bool play_round() {
    std::vector<Vertex> moved;
    if (!guarded(Side::cops, [&] { moved = cops_.move(view_); })) return false;
    if (!legal_cop_move(g_, params_, state_, moved)) {
      abort(Side::cops, "illegal_move", "cop displacement exceeds s_c");
      return false;
    }
    state_.cops = std::move(moved);
    if (in_capture_zone(g_, params_, state_.cops, state_.robber)) {
      capture();
      trace_.rounds.push_back({state_.round, state_.cops, {}, state_.visits, state_.status});
      return false;
    }

    Path path;
    if (!guarded(Side::robber, [&] { path = robber_.move(view_); })) return false;
    GameState next;
    if (!guarded(Side::robber, [&] { next = apply_robber_path(g_, params_, state_, path); })) {
      return false;
    }
    state_ = std::move(next);
    if (state_.status == Status::captured) capture();
    trace_.rounds.push_back({state_.round, state_.cops, path, state_.visits, state_.status});
    return state_.status == Status::running;
  }

  MatchResult finish() {
    outcome_.visits = state_.visits;
    if (!trace_.rounds.empty() && outcome_.status != Status::aborted) {
      trace_.rounds.back().status = outcome_.status;
    }
    trace_.outcome = outcome_;
    return MatchResult{outcome_, trace_};
  }

  const GraphOracle& g_;
  const GameParams& params_;
  CopStrategy& cops_;
  RobberStrategy& robber_;
  GameState state_;
  Trace trace_;
  Outcome outcome_;
  MatchView view_;
};

}  // namespace

MatchResult run_match(const GraphOracle& g, const GameParams& params, CopStrategy& cops,
                      RobberStrategy& robber) {
  return Match(g, params, cops, robber).run();
}

ReplayReport replay(const GraphOracle& g, const Trace& trace) {
  ReplayReport report;
  const GameParams& params = trace.params;
  auto fail = [&](std::uint32_t round, const std::string& what) {
    report.ok = false;
    report.violations.push_back("round " + std::to_string(round) + ": " + what);
  };

  if (trace.generator != g.id()) fail(0, "trace was recorded on '" + trace.generator + "'");
  if (params.R <= params.rho) fail(0, "R must exceed rho");
  if (trace.rounds.empty()) {
    fail(0, "trace has no rounds");
    report.outcome = trace.outcome;
    return report;
  }

  GameState st;
  Outcome& out = report.outcome;
  const RoundRecord& first = trace.rounds.front();
  if (first.round != 0) fail(0, "first record is not round 0");
  if (first.cops.size() != params.k) fail(0, "wrong number of cops placed");
  if (first.robber_path.size() != 1) fail(0, "robber placement must be a single vertex");
  if (!report.ok) {
    out = trace.outcome;
    return report;
  }
  st.cops = first.cops;
  st.robber = first.robber_path.front();

  bool over = false;
  if (in_capture_zone(g, params, st.cops, st.robber)) {
    st.status = Status::captured;
    out.status = Status::captured;
    out.round = 0;
    over = true;
  }
  if (first.visits != 0) fail(0, "visits must start at 0");
  if (first.status != st.status && !(trace.rounds.size() == 1 && first.status == trace.outcome.status)) {
    fail(0, "recorded status does not match the replay");
  }

  for (std::size_t i = 1; i < trace.rounds.size() && !over; ++i) {
    const RoundRecord& rec = trace.rounds[i];
    st.round = static_cast<std::uint32_t>(i);
    if (rec.round != i) fail(st.round, "round index out of sequence");
    if (!legal_cop_move(g, params, st, rec.cops)) fail(st.round, "illegal cop move");
    st.cops = rec.cops;

    if (in_capture_zone(g, params, st.cops, st.robber)) {
      if (!rec.robber_path.empty()) fail(st.round, "robber moved after being captured");
      st.status = Status::captured;
      out.status = Status::captured;
      out.round = st.round;
      over = true;
    } else {
      try {
        st = apply_robber_path(g, params, st, rec.robber_path);
      } catch (const IllegalMove& e) {
        fail(st.round, e.what());
        break;
      }
      if (st.status == Status::captured) {
        out.status = Status::captured;
        out.round = st.round;
        over = true;
      }
    }
    if (rec.visits != st.visits) fail(st.round, "recorded visits differ from the replay");
    const bool last = (i + 1 == trace.rounds.size());
    if (!last && rec.status != st.status) fail(st.round, "recorded status does not match the replay");
    if (over && !last) fail(st.round, "records continue after capture");
  }
  out.visits = st.visits;

  if (!over) {
    if (trace.outcome.status == Status::aborted) {
      // The offending move never made it into the trace; only the prefix
      // can be checked.
      out = trace.outcome;
      if (out.visits != st.visits) fail(out.round, "aborted outcome reports wrong visits");
    } else if (report.ok) {
      if (trace.rounds.size() != params.horizon + 1u) {
        fail(static_cast<std::uint32_t>(trace.rounds.size()), "match ended before the horizon");
      }
      out.status = st.visits >= params.visit_quota ? Status::robber_survives : Status::horizon_reached;
      out.round = params.horizon;
    }
  }
  if (report.ok && !(out == trace.outcome)) fail(out.round, "recorded outcome differs from the replay");
  const RoundRecord& tail = trace.rounds.back();
  if (report.ok && out.status != Status::aborted && tail.status != out.status) {
    fail(tail.round, "final record status differs from the outcome");
  }
  return report;
}

}  // namespace cops
