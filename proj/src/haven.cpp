#include "cops/haven.hpp"

#include <algorithm>
#include <exception>
#include <unordered_map>

#include "cops/errors.hpp"

namespace cops {

StrategyTables precompute_tables(const GraphOracle& g, const RaySystem& rays, std::uint32_t k,
                                 std::uint64_t s_c, std::uint64_t rho, std::uint64_t growth_cap) {
  if (k == 0) throw ContractViolation("the haven strategy needs k >= 1");
  StrategyTables t;
  t.k = k;
  t.s_c = s_c;
  t.rho = rho;
  t.root = rays.root;
  t.required_rays = k * ball_size(g, s_c + rho) + 1;
  t.N = k * ball_size(g, rho) + 1;

  auto family = rays.disjoint_family(t.required_rays);
  if (!family || family->rays.size() < t.required_rays) {
    throw NoThickEndWitness("'" + g.id() + "' cannot supply " + std::to_string(t.required_rays) +
                            " disjoint rays in one end");
  }
  for (const auto& ray : family->rays) {
    if (!ray.monotone() || distance(g, t.root, ray.source()) > family->radius) {
      throw BrokenWitness("ray family of '" + g.id() + "' violates its contract");
    }
  }
  t.family = std::move(family->rays);
  t.radii.push_back(family->radius);

  for (std::uint64_t i = 0; i < t.N; ++i) {
    const std::uint64_t r = t.radii.back();
    std::vector<Vertex> X;
    for (auto& v : sphere(g, t.root, r + 1)) {
      if (rays.outward_ray(v)) X.push_back(std::move(v));
    }
    std::sort(X.begin(), X.end());
    if (X.empty()) {
      throw BrokenWitness("no outward rays cross S(" + std::to_string(r + 1) + ") in '" + g.id() + "'");
    }
    std::uint64_t next = 0;
    try {
      next = annulus_connect_radius(g, t.root, X, r, growth_cap);
    } catch (const GrowthCapExceeded& e) {
      throw BrokenWitness(e.what());
    }
    t.connectors.push_back(std::move(X));
    t.radii.push_back(next);
  }
  t.s_r = ball_size(g, t.outer_radius());
  t.R_declared = t.radii.front();
  return t;
}

SafetyMap::SafetyMap(std::vector<Vertex> cops, VertexSet unsafe, VertexSet closed, std::uint64_t safe_beyond)
    : cops_(std::move(cops)), unsafe_(std::move(unsafe)), closed_(std::move(closed)), safe_beyond_(safe_beyond) {}

SafetyMap SafetyMap::from_sets(const GraphOracle& g, const Vertex& root, VertexSet unsafe, VertexSet closed) {
  std::uint64_t reach = 0;
  for (const auto& v : unsafe) reach = std::max(reach, distance(g, root, v));
  for (const auto& v : closed) {
    if (!unsafe.contains(v)) throw ContractViolation("every closed vertex must also be unsafe");
  }
  return SafetyMap({}, std::move(unsafe), std::move(closed), reach);
}

SafetyMap safety_map(const GraphOracle& g, const StrategyTables& tables, const std::vector<Vertex>& cops) {
  VertexSet unsafe;
  VertexSet closed;
  std::uint64_t reach = 0;
  for (const auto& c : cops) {
    for (auto& v : ball(g, c, tables.s_c + tables.rho)) unsafe.insert(std::move(v));
    for (auto& v : ball(g, c, tables.rho)) closed.insert(std::move(v));
    reach = std::max(reach, distance(g, tables.root, c) + tables.s_c + tables.rho);
  }
  return SafetyMap(cops, std::move(unsafe), std::move(closed), reach);
}

bool ray_safe(const GraphOracle& g, const StrategyTables& tables, const SafetyMap& map, const Ray& ray) {
  if (map.unsafe_set().empty()) return true;
  const std::uint64_t d0 = distance(g, tables.root, ray.source());
  // Monotone: step t sits at root distance d0 + t.
  for (std::uint64_t t = 0; d0 + t <= map.safe_beyond(); ++t) {
    if (!map.safe(ray.at(t))) return false;
  }
  return true;
}

Haven find_haven(const GraphOracle& g, const StrategyTables& tables, const SafetyMap& map) {
  for (std::size_t i = 0; i < tables.family.size(); ++i) {
    if (ray_safe(g, tables, map, tables.family[i])) return Haven{i, tables.family[i]};
  }
  throw ImpossibleState("no family ray is entirely safe (" + std::to_string(map.unsafe_set().size()) +
                        " unsafe vertices, " + std::to_string(tables.family.size()) + " rays)");
}

std::uint64_t open_annulus_index(const GraphOracle& g, const StrategyTables& tables, const SafetyMap& map) {
  std::vector<bool> dirty(tables.N + 1, false);
  for (const auto& v : map.closed_set()) {
    const std::uint64_t d = distance(g, tables.root, v);
    // annulus i covers root distances R_{i-1} + 1 .. R_i
    auto it = std::lower_bound(tables.radii.begin(), tables.radii.end(), d);
    if (it == tables.radii.begin() || it == tables.radii.end()) continue;
    dirty[static_cast<std::size_t>(it - tables.radii.begin())] = true;
  }
  for (std::uint64_t i = 1; i <= tables.N; ++i) {
    if (!dirty[i]) return i;
  }
  throw ImpossibleState("every one of the " + std::to_string(tables.N) + " annuli holds a closed vertex");
}

Path erase_loops(const Path& walk) {
  Path out;
  std::unordered_map<Vertex, std::size_t, VertexHash> at;
  for (const auto& v : walk) {
    auto it = at.find(v);
    if (it == at.end()) {
      at.emplace(v, out.size());
      out.push_back(v);
      continue;
    }
    const std::size_t keep = it->second + 1;
    for (std::size_t j = keep; j < out.size(); ++j) at.erase(out[j]);
    out.resize(keep);
  }
  return out;
}

namespace {

void check_plan(const GraphOracle& g, const StrategyTables& tables, const SafetyMap& map, const Path& path) {
  if (path_length(path) > tables.s_r) {
    throw ImpossibleState("planned path of length " + std::to_string(path_length(path)) +
                          " exceeds s_r = " + std::to_string(tables.s_r));
  }
  for (const auto& v : path) {
    if (!map.open(v)) throw ImpossibleState("planned path visits closed vertex " + g.encode(v));
    if (distance(g, tables.root, v) > tables.outer_radius()) {
      throw ImpossibleState("planned path leaves B(R_N) at " + g.encode(v));
    }
  }
}

}  // namespace

MovePlan plan_move(const GraphOracle& g, const StrategyTables& tables, const Haven& current,
                   const SafetyMap& map) {
  if (ray_safe(g, tables, map, current.ray)) return MovePlan{{current.vertex()}, current};

  Haven target = find_haven(g, tables, map);
  const std::uint64_t i = open_annulus_index(g, tables, map);
  const std::uint64_t r_lo = tables.R(i - 1);
  const std::uint64_t r_hi = tables.R(i);
  const std::uint64_t cross = r_lo + 1;

  const Vertex p = ray_cross(g, current.ray, tables.root, cross);
  const Vertex q = ray_cross(g, target.ray, tables.root, cross);
  const Path out = current.ray.prefix(cross - distance(g, tables.root, current.vertex()));
  Path in = target.ray.prefix(cross - distance(g, tables.root, target.vertex()));
  std::reverse(in.begin(), in.end());
  const Path around = annulus_path(g, tables.root, p, q, r_lo, r_hi,
                                   [&map](const Vertex& v) { return map.open(v); });

  Path walk = out;
  walk.insert(walk.end(), around.begin() + 1, around.end());
  walk.insert(walk.end(), in.begin() + 1, in.end());
  Path path = erase_loops(walk);
  check_plan(g, tables, map, path);
  return MovePlan{std::move(path), std::move(target)};
}

MovePlan plan_move(const GraphOracle& g, const StrategyTables& tables, const Haven& current,
                   const std::vector<Vertex>& cops_after_move) {
  return plan_move(g, tables, current, safety_map(g, tables, cops_after_move));
}

Haven choose_start(const GraphOracle& g, const StrategyTables& tables, const std::vector<Vertex>& cops) {
  return find_haven(g, tables, safety_map(g, tables, cops));
}

HavenRobber::HavenRobber(std::shared_ptr<const StrategyTables> tables) : tables_(std::move(tables)) {
  if (!tables_) throw ContractViolation("HavenRobber needs strategy tables");
}

Vertex HavenRobber::place(const MatchView& view) {
  haven_ = choose_start(view.graph, *tables_, view.state.cops);
  return haven_->vertex();
}

Path HavenRobber::move(const MatchView& view) {
  if (!haven_ || haven_->vertex() != view.state.robber) {
    throw ImpossibleState("haven robber lost track of its position");
  }
  MovePlan plan = plan_move(view.graph, *tables_, *haven_, view.state.cops);
  haven_ = std::move(plan.target);
  return std::move(plan.path);
}

HavenNegotiator::HavenNegotiator(const Arena& arena, std::uint64_t growth_cap)
    : arena_(arena), growth_cap_(growth_cap) {}

RobberChoices HavenNegotiator::choices() {
  RobberChoices rc;
  rc.s_r = [this](const Commitments& c) {
    if (!c.s_c || !c.rho) {
      throw NegotiationError("the haven robber picks its speed only after s_c and rho are committed");
    }
    tables_ = std::make_shared<const StrategyTables>(
        precompute_tables(arena_.graph, arena_.rays, c.k, *c.s_c, *c.rho, growth_cap_));
    return tables_->s_r;
  };
  rc.R = [this](const Commitments&) {
    if (!tables_) throw NegotiationError("robber reach requested before the robber speed");
    return tables_->R_declared;
  };
  return rc;
}

namespace {

PlacementCheck check_one(const GraphOracle& g, const StrategyTables& tables, const std::vector<Vertex>& cops) {
  PlacementCheck out;
  const SafetyMap map = safety_map(g, tables, cops);
  try {
    out.haven_index = find_haven(g, tables, map).index;
    out.haven_found = true;
  } catch (const ImpossibleState&) {
  }
  try {
    out.annulus_index = open_annulus_index(g, tables, map);
    out.annulus_found = true;
  } catch (const ImpossibleState&) {
  }
  return out;
}

}  // namespace

std::vector<PlacementCheck> check_placements(const GraphOracle& g, const StrategyTables& tables,
                                             const std::vector<std::vector<Vertex>>& placements) {
  std::vector<PlacementCheck> out(placements.size());
  const auto n = static_cast<std::int64_t>(placements.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = check_one(g, tables, placements[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(cops_check_placements)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<PlacementCheck> check_placements_serial(const GraphOracle& g, const StrategyTables& tables,
                                                    const std::vector<std::vector<Vertex>>& placements) {
  std::vector<PlacementCheck> out;
  out.reserve(placements.size());
  for (const auto& cops : placements) out.push_back(check_one(g, tables, cops));
  return out;
}

}  // namespace cops
