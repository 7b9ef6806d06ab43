#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cops/game.hpp"
#include "cops/graph.hpp"

namespace cops {

enum class CopKind { greedy, stationary, random, perimeter };

const char* to_string(CopKind kind);
CopKind parse_cop_kind(const std::string& text);

struct CopStrategyConfig {
  CopKind kind = CopKind::stationary;
  std::uint64_t seed = 0;
  /// Sphere the perimeter cops camp on; defaults to R + 1.
  std::optional<std::uint64_t> perimeter_radius;
  /// Cops start on stations of this sphere around v0.
  std::uint64_t start_radius = 2;
};

/// k stations spread over S(radius, v0). On the grid these are the diamond
/// corners (r,0), (0,r), (-r,0), (0,-r) for k <= 4 and equal arc steps along
/// the diamond otherwise; other generators take evenly spaced sphere vertices.
std::vector<Vertex> stations(const GraphOracle& g, const Vertex& v0, std::uint64_t radius, std::uint32_t k);

/// Each cop jumps to the vertex of B(s_c, cop) closest to the robber,
/// least vertex on ties.
std::vector<Vertex> greedy_step(const GraphOracle& g, const GameParams& params, const GameState& state);

/// Greedy step of one cop towards an arbitrary target.
Vertex step_towards(const GraphOracle& g, const Vertex& from, const Vertex& target, std::uint64_t s_c);

class PerimeterCops;

std::unique_ptr<CopStrategy> make_cop_strategy(const CopStrategyConfig& config);

/// Cops walk to stations on S(perimeter_radius, v0), then each shadows the
/// point of its sector of the sphere nearest to the robber.
class PerimeterCops final : public CopStrategy {
 public:
  explicit PerimeterCops(CopStrategyConfig config) : config_(std::move(config)) {}

  std::vector<Vertex> place(const MatchView& view) override;
  std::vector<Vertex> move(const MatchView& view) override;

  std::uint64_t radius(const GameParams& params) const;
  /// Sphere vertex of cop j's sector closest to `robber`.
  Vertex shadow_target(const GraphOracle& g, const GameParams& params, std::size_t j, const Vertex& robber);
  const std::vector<bool>& stationed() const { return stationed_; }

 private:
  void prepare(const GraphOracle& g, const GameParams& params);

  CopStrategyConfig config_;
  std::vector<Vertex> stations_;
  std::vector<std::vector<Vertex>> sectors_;
  std::vector<bool> stationed_;
};

}  // namespace cops
