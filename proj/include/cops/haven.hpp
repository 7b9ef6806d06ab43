#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "cops/game.hpp"
#include "cops/generators.hpp"
#include "cops/graph.hpp"
#include "cops/rays.hpp"
#include "cops/search.hpp"

namespace cops {

using VertexSet = std::unordered_set<Vertex, VertexHash>;

/// Everything the haven robber fixes before play starts.
///
/// radii[0] = R_0 is the radius that holds the sources of `family`, which
/// has at least k * b(s_c + rho) + 1 disjoint monotone rays. For i < N,
/// connectors[i] (the set X_i) lies on S(R_i + 1) and is connected inside
/// B(R_{i+1}) \ B(R_i). The robber speed is b(R_N) and the robber reach is R_0.
struct StrategyTables {
  std::uint32_t k = 1;
  std::uint64_t s_c = 0;
  std::uint64_t rho = 0;
  Vertex root;
  std::uint64_t required_rays = 0;  ///< k * b(s_c + rho) + 1
  std::uint64_t N = 0;              ///< k * b(rho) + 1
  std::vector<std::uint64_t> radii;  ///< R_0 .. R_N
  std::vector<Ray> family;
  std::vector<std::vector<Vertex>> connectors;  ///< X_0 .. X_{N-1}
  std::uint64_t s_r = 0;
  std::uint64_t R_declared = 0;

  std::uint64_t R(std::size_t i) const { return radii.at(i); }
  std::uint64_t outer_radius() const { return radii.back(); }
};

/// Throws NoThickEndWitness when the ray system cannot supply enough
/// disjoint rays, BrokenWitness when a connector set never joins up.
StrategyTables precompute_tables(const GraphOracle& g, const RaySystem& rays, std::uint32_t k,
                                 std::uint64_t s_c, std::uint64_t rho,
                                 std::uint64_t growth_cap = kDefaultAnnulusGrowthCap);

/// Open/safe classification relative to a cop snapshot.
///
/// A vertex is open when it is further than rho from every cop and safe
/// when it is further than s_c + rho. Outside B(safe_beyond(), root) every
/// vertex is safe.
class SafetyMap {
 public:
  SafetyMap() = default;
  SafetyMap(std::vector<Vertex> cops, VertexSet unsafe, VertexSet closed, std::uint64_t safe_beyond);

  /// Map from explicit sets. safe_beyond is derived from the unsafe set.
  static SafetyMap from_sets(const GraphOracle& g, const Vertex& root, VertexSet unsafe,
                             VertexSet closed);

  bool safe(const Vertex& v) const { return !unsafe_.contains(v); }
  bool open(const Vertex& v) const { return !closed_.contains(v); }
  const VertexSet& unsafe_set() const noexcept { return unsafe_; }
  const VertexSet& closed_set() const noexcept { return closed_; }
  const std::vector<Vertex>& cops() const noexcept { return cops_; }
  std::uint64_t safe_beyond() const noexcept { return safe_beyond_; }

 private:
  std::vector<Vertex> cops_;
  VertexSet unsafe_;
  VertexSet closed_;
  std::uint64_t safe_beyond_ = 0;
};

SafetyMap safety_map(const GraphOracle& g, const StrategyTables& tables, const std::vector<Vertex>& cops);

/// Whether every vertex of a monotone ray is safe. Only the prefix inside
/// B(map.safe_beyond()) is inspected.
bool ray_safe(const GraphOracle& g, const StrategyTables& tables, const SafetyMap& map, const Ray& ray);

struct Haven {
  std::size_t index = 0;  ///< position in tables.family
  Ray ray;
  const Vertex& vertex() const { return ray.source(); }
};

/// First family ray made entirely of safe vertices.
/// Throws ImpossibleState when every family ray is blocked.
Haven find_haven(const GraphOracle& g, const StrategyTables& tables, const SafetyMap& map);

/// Least i in 1..N whose annulus B(R_i) \ B(R_{i-1}) has no closed vertex.
/// Throws ImpossibleState when there is none.
std::uint64_t open_annulus_index(const GraphOracle& g, const StrategyTables& tables, const SafetyMap& map);

/// Drops every cycle from a walk, keeping it a walk between the same ends.
Path erase_loops(const Path& walk);

struct MovePlan {
  Path path;
  Haven target;
};

/// One robber turn. `current` was a haven before the cops moved; the plan
/// either stays (current is still a haven) or walks out along the current
/// ray, around a fully open annulus, and in along the new haven's ray.
/// Throws ImpossibleState if the resulting path breaks the move contract.
MovePlan plan_move(const GraphOracle& g, const StrategyTables& tables, const Haven& current,
                   const SafetyMap& map_after_cop_move);
MovePlan plan_move(const GraphOracle& g, const StrategyTables& tables, const Haven& current,
                   const std::vector<Vertex>& cops_after_move);

Haven choose_start(const GraphOracle& g, const StrategyTables& tables, const std::vector<Vertex>& cops);

/// The robber strategy registered as "haven".
class HavenRobber final : public RobberStrategy {
 public:
  explicit HavenRobber(std::shared_ptr<const StrategyTables> tables);

  Vertex place(const MatchView& view) override;
  Path move(const MatchView& view) override;

  const StrategyTables& tables() const { return *tables_; }
  const std::optional<Haven>& haven() const { return haven_; }

 private:
  std::shared_ptr<const StrategyTables> tables_;
  std::optional<Haven> haven_;
};

/// Negotiation callbacks for the haven robber. The speed callback needs rho
/// to be committed already (weak game) and computes the tables on first
/// use; `tables()` is available afterwards.
class HavenNegotiator {
 public:
  explicit HavenNegotiator(const Arena& arena, std::uint64_t growth_cap = kDefaultAnnulusGrowthCap);

  RobberChoices choices();
  std::shared_ptr<const StrategyTables> tables() const { return tables_; }

 private:
  const Arena& arena_;
  std::uint64_t growth_cap_;
  std::shared_ptr<const StrategyTables> tables_;
};

/// Result of checking one cop placement against the two counting bounds.
struct PlacementCheck {
  bool haven_found = false;
  std::size_t haven_index = 0;
  bool annulus_found = false;
  std::uint64_t annulus_index = 0;

  friend bool operator==(const PlacementCheck&, const PlacementCheck&) = default;
};

/// Batch version of find_haven / open_annulus_index over many placements,
/// parallel across placements. Results are in placement order.
std::vector<PlacementCheck> check_placements(const GraphOracle& g, const StrategyTables& tables,
                                             const std::vector<std::vector<Vertex>>& placements);

/// Serial reference for check_placements.
std::vector<PlacementCheck> check_placements_serial(const GraphOracle& g, const StrategyTables& tables,
                                                    const std::vector<std::vector<Vertex>>& placements);

}  // namespace cops
