#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cops/baselines.hpp"
#include "cops/errors.hpp"
#include "cops/game.hpp"
#include "cops/generators.hpp"
#include "cops/haven.hpp"
#include "cops/search.hpp"
#include "cops/trace.hpp"

using namespace cops;

namespace {

Vertex at(int x, int y) { return Vertex::xy(x, y); }

auto fixed(std::uint64_t v) {
  return [v](const Commitments&) { return v; };
}

GameParams grid_params(std::uint64_t s_c, std::uint64_t rho, std::uint64_t s_r, std::uint64_t R) {
  GameParams p;
  p.k = 1;
  p.s_c = s_c;
  p.rho = rho;
  p.s_r = s_r;
  p.R = R;
  p.v0 = at(0, 0);
  p.horizon = 20;
  p.visit_quota = 10;
  return p;
}

GameState state_with(std::vector<Vertex> cops, Vertex robber) {
  GameState s;
  s.cops = std::move(cops);
  s.robber = std::move(robber);
  return s;
}

class ParkedCops final : public CopStrategy {
 public:
  explicit ParkedCops(std::vector<Vertex> spots) : spots_(std::move(spots)) {}
  std::vector<Vertex> place(const MatchView&) override { return spots_; }
  std::vector<Vertex> move(const MatchView& view) override { return view.state.cops; }

 private:
  std::vector<Vertex> spots_;
};

class TeleportingCop final : public CopStrategy {
 public:
  std::vector<Vertex> place(const MatchView&) override { return {at(50, 50)}; }
  std::vector<Vertex> move(const MatchView&) override { return {at(-50, -50)}; }
};

class ParkedRobber final : public RobberStrategy {
 public:
  explicit ParkedRobber(Vertex spot) : spot_(std::move(spot)) {}
  Vertex place(const MatchView&) override { return spot_; }
  Path move(const MatchView& view) override { return {view.state.robber}; }

 private:
  Vertex spot_;
};

class JumpingRobber final : public RobberStrategy {
 public:
  Vertex place(const MatchView&) override { return at(0, 0); }
  Path move(const MatchView& view) override { return {view.state.robber, at(3, 3)}; }
};

class ThrowingRobber final : public RobberStrategy {
 public:
  Vertex place(const MatchView&) override { return at(0, 0); }
  Path move(const MatchView&) override { throw ImpossibleState("no haven left"); }
};

MatchResult haven_match(std::vector<Vertex> cop_spots, std::uint32_t horizon, std::uint32_t quota) {
  static const Arena grid = make_grid();
  HavenNegotiator negotiator(grid);
  CopChoices cops{static_cast<std::uint32_t>(cop_spots.size()), fixed(1), fixed(1)};
  const auto params = negotiate(Variant::weak, cops, negotiator.choices(), {at(0, 0), horizon, quota});
  ParkedCops cop(std::move(cop_spots));
  HavenRobber robber(negotiator.tables());
  return run_match(grid.graph, params, cop, robber);
}

}  // namespace

TEST(Negotiate, WeakGameWithHavenChoices) {
  const auto grid = make_grid();
  HavenNegotiator negotiator(grid);
  const auto params = negotiate(Variant::weak, {1, fixed(1), fixed(1)}, negotiator.choices(), {at(0, 0), 200, 100});
  EXPECT_EQ(params.s_c, 1u);
  EXPECT_EQ(params.rho, 1u);
  EXPECT_EQ(params.s_r, 761u);
  EXPECT_EQ(params.R, 7u);
  EXPECT_EQ(params.order, (std::vector<std::string>{"s_c", "rho", "s_r", "R"}));
  EXPECT_EQ(params.variant, Variant::weak);
}

TEST(Negotiate, LaterCallbacksSeeEarlierCommitments) {
  std::vector<std::string> seen;
  CopChoices cops{2, [&](const Commitments& c) {
                    EXPECT_FALSE(c.rho || c.s_r || c.R);
                    seen.push_back("s_c");
                    return std::uint64_t{3};
                  },
                  [&](const Commitments& c) {
                    EXPECT_EQ(c.s_c, 3u);
                    seen.push_back("rho");
                    return std::uint64_t{1};
                  }};
  RobberChoices robber{[&](const Commitments& c) {
                         EXPECT_EQ(c.rho, 1u);
                         EXPECT_EQ(c.k, 2u);
                         seen.push_back("s_r");
                         return std::uint64_t{50};
                       },
                       [&](const Commitments& c) {
                         EXPECT_EQ(c.s_r, 50u);
                         seen.push_back("R");
                         return std::uint64_t{4};
                       }};
  negotiate(Variant::weak, cops, robber, {at(0, 0), 10, 5});
  EXPECT_EQ(seen, (std::vector<std::string>{"s_c", "rho", "s_r", "R"}));
}

TEST(Negotiate, StrongGameCommitsRhoAfterRobberSpeed) {
  RobberChoices robber{[](const Commitments& c) {
                         EXPECT_FALSE(c.rho);
                         return std::uint64_t{9};
                       },
                       fixed(5)};
  CopChoices cops{1, fixed(2), [](const Commitments& c) {
                    EXPECT_EQ(c.s_r, 9u);
                    return std::uint64_t{1};
                  }};
  const auto params = negotiate(Variant::strong, cops, robber, {at(0, 0), 10, 5});
  EXPECT_EQ(params.order, (std::vector<std::string>{"s_c", "s_r", "rho", "R"}));
  EXPECT_EQ(params.variant, Variant::strong);
}

TEST(Negotiate, RejectsTrivialCopWin) {
  EXPECT_THROW(negotiate(Variant::weak, {1, fixed(1), fixed(2)}, {fixed(5), fixed(2)}, {at(0, 0), 10, 5}),
               NegotiationError);
  EXPECT_THROW(negotiate(Variant::weak, {1, fixed(1), fixed(2)}, {fixed(5), fixed(1)}, {at(0, 0), 10, 5}),
               NegotiationError);
}

TEST(Negotiate, RejectsDegenerateSettings) {
  EXPECT_THROW(negotiate(Variant::weak, {0, fixed(1), fixed(0)}, {fixed(5), fixed(2)}, {at(0, 0), 10, 5}),
               NegotiationError);
  EXPECT_THROW(negotiate(Variant::weak, {1, fixed(1), fixed(0)}, {fixed(5), fixed(2)}, {at(0, 0), 0, 5}),
               NegotiationError);
  EXPECT_THROW(negotiate(Variant::weak, {1, fixed(1), fixed(0)}, {fixed(5), fixed(2)}, {at(0, 0), 10, 0}),
               NegotiationError);
  EXPECT_THROW(negotiate(Variant::weak, {1, nullptr, fixed(0)}, {fixed(5), fixed(2)}, {at(0, 0), 10, 5}),
               NegotiationError);
}

TEST(Negotiate, HavenSpeedNeedsRhoFirst) {
  const auto grid = make_grid();
  HavenNegotiator negotiator(grid);
  EXPECT_THROW(negotiate(Variant::strong, {1, fixed(1), fixed(1)}, negotiator.choices(), {at(0, 0), 10, 5}),
               NegotiationError);
}

TEST(LegalCopMove, Examples) {
  const auto grid = make_grid();
  const auto s = state_with({at(0, 0)}, at(9, 9));
  EXPECT_TRUE(legal_cop_move(grid.graph, grid_params(2, 0, 0, 1), s, {at(1, 1)}));
  EXPECT_FALSE(legal_cop_move(grid.graph, grid_params(1, 0, 0, 1), s, {at(1, 1)}));
  EXPECT_TRUE(legal_cop_move(grid.graph, grid_params(0, 0, 0, 1), s, {at(0, 0)}));
}

TEST(LegalCopMove, CopsMayCoincideButCountMustMatch) {
  const auto grid = make_grid();
  auto p = grid_params(1, 0, 0, 1);
  p.k = 2;
  const auto s = state_with({at(0, 0), at(2, 0)}, at(9, 9));
  EXPECT_TRUE(legal_cop_move(grid.graph, p, s, {at(1, 0), at(1, 0)}));
  EXPECT_FALSE(legal_cop_move(grid.graph, p, s, {at(1, 0)}));
}

TEST(ApplyRobberPath, FarCopKeepsGameRunning) {
  const auto grid = make_grid();
  const auto next = apply_robber_path(grid.graph, grid_params(1, 1, 3, 4), state_with({at(5, 5)}, at(0, 0)),
                                      {at(0, 0), at(0, 1)});
  EXPECT_EQ(next.status, Status::running);
  EXPECT_EQ(next.robber, at(0, 1));
  EXPECT_EQ(next.visits, 1u);
}

TEST(ApplyRobberPath, InteriorVertexInsideCaptureZone) {
  const auto grid = make_grid();
  const auto next = apply_robber_path(grid.graph, grid_params(1, 1, 3, 4), state_with({at(0, 2)}, at(0, 0)),
                                      {at(0, 0), at(0, 1), at(1, 1)});
  EXPECT_EQ(next.status, Status::captured);
}

TEST(ApplyRobberPath, IllegalPaths) {
  const auto grid = make_grid();
  const auto p = grid_params(1, 0, 3, 4);
  const auto s = state_with({at(40, 40)}, at(0, 0));
  const Path five{at(0, 0), at(1, 0), at(2, 0), at(3, 0), at(4, 0), at(5, 0)};
  EXPECT_THROW(apply_robber_path(grid.graph, p, s, five), IllegalMove);
  EXPECT_THROW(apply_robber_path(grid.graph, p, s, {at(1, 0), at(2, 0)}), IllegalMove);
  EXPECT_THROW(apply_robber_path(grid.graph, p, s, {at(0, 0), at(1, 1)}), IllegalMove);
  EXPECT_THROW(apply_robber_path(grid.graph, p, s, {}), IllegalMove);
}

TEST(ApplyRobberPath, VisitsOnlyCountInsideTargetBall) {
  const auto grid = make_grid();
  const auto p = grid_params(1, 0, 3, 2);
  auto s = state_with({at(40, 40)}, at(0, 0));
  s = apply_robber_path(grid.graph, p, s, {at(0, 0), at(1, 0), at(2, 0)});
  EXPECT_EQ(s.visits, 1u);
  s = apply_robber_path(grid.graph, p, s, {at(2, 0), at(3, 0)});
  EXPECT_EQ(s.visits, 1u);
  s = apply_robber_path(grid.graph, p, s, {at(3, 0)});
  EXPECT_EQ(s.visits, 1u);
}

TEST(RunMatch, ParkedCopAgainstHavenRobberSurvives) {
  const auto result = haven_match({at(100, 100)}, 50, 50);
  EXPECT_EQ(result.outcome.status, Status::robber_survives);
  EXPECT_EQ(result.outcome.visits, 50u);
  EXPECT_EQ(result.outcome.round, 50u);
  ASSERT_EQ(result.trace.rounds.size(), 51u);
  EXPECT_EQ(result.trace.rounds[0].robber_path, Path{at(-7, 0)});
}

TEST(RunMatch, GreedyCopCatchesParkedRobber) {
  const auto grid = make_grid();
  auto p = grid_params(1, 0, 0, 1);
  p.horizon = 30;
  p.visit_quota = 15;
  auto cops = make_cop_strategy({CopKind::greedy, 0});
  ParkedRobber robber(at(6, 9));
  const auto result = run_match(grid.graph, p, *cops, robber);
  EXPECT_EQ(result.outcome.status, Status::captured);
  EXPECT_LE(result.outcome.round, 30u);
  EXPECT_EQ(result.trace.rounds.back().status, Status::captured);
}

TEST(RunMatch, CaptureAtPlacement) {
  const auto grid = make_grid();
  ParkedCops cops({at(0, 0)});
  ParkedRobber robber(at(1, 0));
  const auto result = run_match(grid.graph, grid_params(1, 1, 1, 2), cops, robber);
  EXPECT_EQ(result.outcome.status, Status::captured);
  EXPECT_EQ(result.outcome.round, 0u);
}

TEST(RunMatch, HorizonReachedBelowQuota) {
  const auto grid = make_grid();
  ParkedCops cops({at(20, 20)});
  ParkedRobber robber(at(9, 0));
  const auto result = run_match(grid.graph, grid_params(1, 1, 1, 2), cops, robber);
  EXPECT_EQ(result.outcome.status, Status::horizon_reached);
  EXPECT_EQ(result.outcome.visits, 0u);
}

TEST(RunMatch, IllegalMovesAbortWithOffender) {
  const auto grid = make_grid();
  {
    TeleportingCop cops;
    ParkedRobber robber(at(0, 0));
    const auto r = run_match(grid.graph, grid_params(1, 0, 0, 1), cops, robber);
    EXPECT_EQ(r.outcome.status, Status::aborted);
    EXPECT_EQ(r.outcome.offender, Side::cops);
    EXPECT_EQ(r.outcome.reason, "illegal_move");
  }
  {
    ParkedCops cops({at(50, 50)});
    JumpingRobber robber;
    const auto r = run_match(grid.graph, grid_params(1, 0, 4, 1), cops, robber);
    EXPECT_EQ(r.outcome.status, Status::aborted);
    EXPECT_EQ(r.outcome.offender, Side::robber);
    EXPECT_EQ(r.outcome.reason, "illegal_move");
    EXPECT_EQ(r.outcome.round, 1u);
  }
  {
    ParkedCops cops({at(50, 50)});
    ThrowingRobber robber;
    const auto r = run_match(grid.graph, grid_params(1, 0, 4, 1), cops, robber);
    EXPECT_EQ(r.outcome.offender, Side::robber);
    EXPECT_EQ(r.outcome.reason, "impossible_state");
  }
}

TEST(RunMatch, IdenticalSeedsGiveIdenticalTraces) {
  const auto grid = make_grid();
  auto run = [&](std::uint64_t seed) {
    HavenNegotiator negotiator(grid);
    const auto params = negotiate(Variant::weak, {2, fixed(1), fixed(0)}, negotiator.choices(), {at(0, 0), 40, 20});
    auto cops = make_cop_strategy({CopKind::random, seed});
    HavenRobber robber(negotiator.tables());
    return to_jsonl(grid.graph, run_match(grid.graph, params, *cops, robber).trace);
  };
  EXPECT_EQ(run(42), run(42));
  EXPECT_NE(run(42), run(43));
}

// ---- trace and replay ----

TEST(Trace, JsonlRoundTrip) {
  const auto grid = make_grid();
  auto result = haven_match({at(3, 0)}, 15, 5);
  result.trace.generator = "grid";
  result.trace.labels["cop"] = "parked";
  const auto text = to_jsonl(grid.graph, result.trace);
  std::istringstream in(text);
  const auto back = read_jsonl(in, grid.graph);
  EXPECT_EQ(to_jsonl(grid.graph, back), text);
  EXPECT_EQ(back.outcome, result.outcome);
  EXPECT_EQ(back.params.order, result.trace.params.order);
  EXPECT_EQ(back.labels.at("cop"), "parked");
  std::istringstream again(text);
  EXPECT_EQ(trace_generator(again), "grid");
}

TEST(Trace, RoundTripOnTreeEncoding) {
  const auto tree = make_tree(3);
  Trace t;
  t.generator = "tree3";
  t.params.v0 = tree.graph.root();
  t.params.order = {"s_c", "rho", "s_r", "R"};
  t.rounds.push_back({0, {Vertex{1, 0}}, {Vertex{0, 1, 1}}, 0, Status::running});
  t.rounds.push_back({1, {Vertex{1}}, {Vertex{0, 1, 1}, Vertex{0, 1}}, 0, Status::captured});
  t.outcome.status = Status::captured;
  t.outcome.round = 1;
  const auto text = to_jsonl(tree.graph, t);
  EXPECT_NE(text.find("\"^011\""), std::string::npos);
  std::istringstream in(text);
  EXPECT_EQ(to_jsonl(tree.graph, read_jsonl(in, tree.graph)), text);
}

TEST(Trace, MalformedInputIsATraceError) {
  const auto grid = make_grid();
  std::istringstream empty("");
  EXPECT_THROW(read_jsonl(empty, grid.graph), TraceError);
  std::istringstream junk("{\"generator\": \"grid\"}\nnot json\n");
  EXPECT_THROW(read_jsonl(junk, grid.graph), TraceError);
}

TEST(Replay, ReproducesRecordedOutcome) {
  const auto grid = make_grid();
  for (auto kind : {CopKind::greedy, CopKind::perimeter, CopKind::random}) {
    HavenNegotiator negotiator(grid);
    const auto params = negotiate(Variant::weak, {2, fixed(2), fixed(1)}, negotiator.choices(), {at(0, 0), 30, 15});
    auto cops = make_cop_strategy({kind, 7});
    HavenRobber robber(negotiator.tables());
    const auto result = run_match(grid.graph, params, *cops, robber);
    const auto report = replay(grid.graph, result.trace);
    EXPECT_TRUE(report.ok) << to_string(kind);
    EXPECT_EQ(report.outcome, result.outcome);
  }
}

TEST(Replay, DetectsTampering) {
  const auto grid = make_grid();
  auto result = haven_match({at(2, 0)}, 20, 10);
  ASSERT_TRUE(replay(grid.graph, result.trace).ok);

  auto moved_cop = result.trace;
  moved_cop.rounds[3].cops = {at(30, 30)};
  EXPECT_FALSE(replay(grid.graph, moved_cop).ok);

  auto miscounted = result.trace;
  miscounted.rounds[4].visits += 1;
  EXPECT_FALSE(replay(grid.graph, miscounted).ok);

  auto into_cop = result.trace;
  into_cop.rounds[5].cops = into_cop.rounds[4].cops;
  const auto robber = into_cop.rounds[4].robber_path.back();
  into_cop.rounds[0].cops = {robber};
  EXPECT_FALSE(replay(grid.graph, into_cop).ok);

  auto wrong_outcome = result.trace;
  wrong_outcome.outcome.status = Status::horizon_reached;
  EXPECT_FALSE(replay(grid.graph, wrong_outcome).ok);
}

TEST(EngineProperties, RunningStatesKeepRobberOutsideCaptureZone) {
  const auto grid = make_grid();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    HavenNegotiator negotiator(grid);
    const std::uint64_t rho = trial % 2;
    const auto params = negotiate(Variant::weak, {2, fixed(1 + trial % 3), fixed(rho)}, negotiator.choices(),
                                  {at(0, 0), 25, 12});
    auto cops = make_cop_strategy({trial % 2 ? CopKind::greedy : CopKind::random, rng()});
    HavenRobber robber(negotiator.tables());
    const auto result = run_match(grid.graph, params, *cops, robber);
    std::uint32_t visits = 0;
    for (const auto& rec : result.trace.rounds) {
      if (rec.robber_path.empty()) continue;
      for (const auto& c : rec.cops) EXPECT_GT(distance(grid.graph, c, rec.robber_path.back()), rho);
      if (rec.round > 0 && distance(grid.graph, params.v0, rec.robber_path.back()) <= params.R) ++visits;
      EXPECT_EQ(rec.visits, visits);
    }
    if (result.outcome.status == Status::robber_survives) {
      EXPECT_GE(result.outcome.visits, params.visit_quota);
      for (const auto& rec : result.trace.rounds) EXPECT_NE(rec.status, Status::captured);
    }
  }
}
