#include "cops/baselines.hpp"

#include <algorithm>
#include <limits>

#include "cops/errors.hpp"
#include "cops/search.hpp"

namespace cops {

const char* to_string(CopKind kind) {
  switch (kind) {
    case CopKind::greedy: return "greedy";
    case CopKind::stationary: return "stationary";
    case CopKind::random: return "random";
    case CopKind::perimeter: return "perimeter";
  }
  return "?";
}

CopKind parse_cop_kind(const std::string& text) {
  for (CopKind k : {CopKind::greedy, CopKind::stationary, CopKind::random, CopKind::perimeter}) {
    if (text == to_string(k)) return k;
  }
  throw ConfigError("unknown cop strategy '" + text + "'");
}

namespace {

// Point at arc position s of the diamond |x| + |y| = r, counterclockwise
// from (r, 0).
Vertex diamond_point(std::int32_t r, std::int64_t s) {
  const auto quadrant = static_cast<std::int32_t>(s / r);
  const auto o = static_cast<std::int32_t>(s % r);
  switch (quadrant) {
    case 0: return Vertex::xy(r - o, o);
    case 1: return Vertex::xy(-o, r - o);
    case 2: return Vertex::xy(-r + o, -o);
    default: return Vertex::xy(o, -r + o);
  }
}

Vertex best_in_ball(const GraphOracle& g, const Vertex& from, const Vertex& target, std::uint64_t radius) {
  Vertex best = from;
  std::uint64_t best_d = std::numeric_limits<std::uint64_t>::max();
  for (auto& v : ball(g, from, radius)) {
    const std::uint64_t d = distance(g, v, target);
    if (d < best_d || (d == best_d && v < best)) {
      best_d = d;
      best = std::move(v);
    }
  }
  return best;
}

class StationaryCops final : public CopStrategy {
 public:
  explicit StationaryCops(CopStrategyConfig config) : config_(std::move(config)) {}
  std::vector<Vertex> place(const MatchView& view) override {
    return stations(view.graph, view.params.v0, config_.start_radius, view.params.k);
  }
  std::vector<Vertex> move(const MatchView& view) override { return view.state.cops; }

 private:
  CopStrategyConfig config_;
};

class GreedyCops final : public CopStrategy {
 public:
  explicit GreedyCops(CopStrategyConfig config) : config_(std::move(config)) {}
  std::vector<Vertex> place(const MatchView& view) override {
    return stations(view.graph, view.params.v0, config_.start_radius, view.params.k);
  }
  std::vector<Vertex> move(const MatchView& view) override {
    return greedy_step(view.graph, view.params, view.state);
  }

 private:
  CopStrategyConfig config_;
};

class RandomCops final : public CopStrategy {
 public:
  explicit RandomCops(CopStrategyConfig config) : config_(std::move(config)), rng_(config_.seed) {}
  std::vector<Vertex> place(const MatchView& view) override {
    return stations(view.graph, view.params.v0, config_.start_radius, view.params.k);
  }
  std::vector<Vertex> move(const MatchView& view) override {
    std::vector<Vertex> out;
    out.reserve(view.state.cops.size());
    for (const auto& c : view.state.cops) {
      auto options = ball(view.graph, c, view.params.s_c);
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      out.push_back(std::move(options[pick(rng_)]));
    }
    return out;
  }

 private:
  CopStrategyConfig config_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<Vertex> stations(const GraphOracle& g, const Vertex& v0, std::uint64_t radius, std::uint32_t k) {
  std::vector<Vertex> out;
  if (radius == 0) return std::vector<Vertex>(k, v0);
  if (g.id() == "grid") {
    const auto r = static_cast<std::int32_t>(radius);
    const std::int64_t perimeter = 4 * static_cast<std::int64_t>(r);
    for (std::uint32_t j = 0; j < k; ++j) {
      const std::int64_t s = (k <= 4) ? j * static_cast<std::int64_t>(r) : (j * perimeter) / k;
      const Vertex p = diamond_point(r, s);
      out.push_back(Vertex::xy(v0.x() + p.x(), v0.y() + p.y()));
    }
    return out;
  }
  auto sph = sphere(g, v0, radius);
  std::sort(sph.begin(), sph.end());
  for (std::uint32_t j = 0; j < k; ++j) out.push_back(sph[(j * sph.size()) / k]);
  return out;
}

Vertex step_towards(const GraphOracle& g, const Vertex& from, const Vertex& target, std::uint64_t s_c) {
  return best_in_ball(g, from, target, s_c);
}

std::vector<Vertex> greedy_step(const GraphOracle& g, const GameParams& params, const GameState& state) {
  std::vector<Vertex> out;
  out.reserve(state.cops.size());
  for (const auto& c : state.cops) out.push_back(step_towards(g, c, state.robber, params.s_c));
  return out;
}

std::uint64_t PerimeterCops::radius(const GameParams& params) const {
  return config_.perimeter_radius.value_or(params.R + 1);
}

void PerimeterCops::prepare(const GraphOracle& g, const GameParams& params) {
  const std::uint64_t r = radius(params);
  stations_ = stations(g, params.v0, r, params.k);
  stationed_.assign(params.k, false);
  sectors_.assign(params.k, {});
  auto sph = sphere(g, params.v0, r);
  std::sort(sph.begin(), sph.end());
  for (auto& s : sph) {
    std::size_t owner = 0;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t j = 0; j < stations_.size(); ++j) {
      const std::uint64_t d = distance(g, s, stations_[j]);
      if (d < best) {
        best = d;
        owner = j;
      }
    }
    sectors_[owner].push_back(std::move(s));
  }
}

std::vector<Vertex> PerimeterCops::place(const MatchView& view) {
  prepare(view.graph, view.params);
  return stations(view.graph, view.params.v0, config_.start_radius, view.params.k);
}

Vertex PerimeterCops::shadow_target(const GraphOracle& g, const GameParams& params, std::size_t j,
                                    const Vertex& robber) {
  if (stations_.empty()) prepare(g, params);
  const auto& sector = sectors_.at(j);
  if (sector.empty()) return stations_.at(j);
  Vertex best = sector.front();
  std::uint64_t best_d = std::numeric_limits<std::uint64_t>::max();
  for (const auto& s : sector) {
    const std::uint64_t d = distance(g, s, robber);
    if (d < best_d) {
      best_d = d;
      best = s;
    }
  }
  return best;
}

std::vector<Vertex> PerimeterCops::move(const MatchView& view) {
  if (stations_.empty()) prepare(view.graph, view.params);
  std::vector<Vertex> out;
  out.reserve(view.state.cops.size());
  for (std::size_t j = 0; j < view.state.cops.size(); ++j) {
    const Vertex& c = view.state.cops[j];
    if (!stationed_[j] && c == stations_[j]) stationed_[j] = true;
    const Vertex target = stationed_[j] ? shadow_target(view.graph, view.params, j, view.state.robber)
                                        : stations_[j];
    Vertex next = step_towards(view.graph, c, target, view.params.s_c);
    if (!stationed_[j] && next == stations_[j]) stationed_[j] = true;
    out.push_back(std::move(next));
  }
  return out;
}

std::unique_ptr<CopStrategy> make_cop_strategy(const CopStrategyConfig& config) {
  switch (config.kind) {
    case CopKind::greedy: return std::make_unique<GreedyCops>(config);
    case CopKind::stationary: return std::make_unique<StationaryCops>(config);
    case CopKind::random: return std::make_unique<RandomCops>(config);
    case CopKind::perimeter: return std::make_unique<PerimeterCops>(config);
  }
  throw ConfigError("unknown cop strategy");
}

}  // namespace cops
