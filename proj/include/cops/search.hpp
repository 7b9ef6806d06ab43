#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cops/graph.hpp"
#include "cops/vertex.hpp"

namespace cops {

using VertexPredicate = std::function<bool(const Vertex&)>;

/// Geodesic distance by breadth-first search from u. Reference
/// implementation; throws BudgetExceeded past g.search_budget() expansions.
std::uint64_t bfs_distance(const GraphOracle& g, const Vertex& u, const Vertex& v);

/// Geodesic distance: closed form when the generator has one, BFS otherwise.
std::uint64_t distance(const GraphOracle& g, const Vertex& u, const Vertex& v);

/// d(u, v) <= r, searching at most radius r when no closed form exists.
bool within(const GraphOracle& g, const Vertex& u, const Vertex& v, std::uint64_t r);

/// B(r, c) in breadth-first discovery order (center first).
std::vector<Vertex> ball(const GraphOracle& g, const Vertex& c, std::uint64_t r);

/// S(r, c) in breadth-first discovery order.
std::vector<Vertex> sphere(const GraphOracle& g, const Vertex& c, std::uint64_t r);

/// b(r): the size of radius-r balls for transitive graphs, else the
/// declared bound. Throws UnsupportedGenerator when neither exists.
std::uint64_t ball_size(const GraphOracle& g, std::uint64_t r);

inline constexpr std::uint64_t kDefaultAnnulusGrowthCap = 256;

/// The least R >= r_lo + 1 for which all of X lies in one component of
/// B(R, root) \ B(r_lo, root). Throws GrowthCapExceeded after `growth_cap`
/// unsuccessful radii.
std::uint64_t annulus_connect_radius(const GraphOracle& g, const Vertex& root,
                                     const std::vector<Vertex>& X, std::uint64_t r_lo,
                                     std::uint64_t growth_cap = kDefaultAnnulusGrowthCap);

/// Shortest p-q path inside B(r_hi, root) \ B(r_lo, root) through vertices
/// admitted by `allowed`. Throws DisconnectedAnnulus when none exists.
Path annulus_path(const GraphOracle& g, const Vertex& root, const Vertex& p, const Vertex& q,
                  std::uint64_t r_lo, std::uint64_t r_hi, const VertexPredicate& allowed);

}  // namespace cops
