#include "cops/search.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "cops/errors.hpp"
#include "cops/rays.hpp"

namespace cops {
namespace {

using DistanceMap = std::unordered_map<Vertex, std::uint64_t, VertexHash>;

class Budget {
 public:
  explicit Budget(const GraphOracle& g) : limit_(g.search_budget()), id_(g.id()) {}
  void spend() {
    if (++used_ > limit_) {
      throw BudgetExceeded("search on '" + id_ + "' exceeded " + std::to_string(limit_) +
                           " vertex expansions");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  const std::string& id_;
};

// Layered BFS from c out to radius r. Calls visit(v, depth) once per vertex
// in discovery order; stops early when visit returns false.
template <typename Visit>
void bfs_layers(const GraphOracle& g, const Vertex& c, std::uint64_t r, Visit&& visit) {
  Budget budget(g);
  DistanceMap dist;
  std::deque<Vertex> queue;
  std::vector<Vertex> nb;
  dist.emplace(c, 0);
  queue.push_back(c);
  while (!queue.empty()) {
    Vertex v = std::move(queue.front());
    queue.pop_front();
    const std::uint64_t d = dist.at(v);
    if (!visit(v, d)) return;
    if (d == r) continue;
    budget.spend();
    g.neighbors(v, nb);
    for (auto& w : nb) {
      if (dist.emplace(w, d + 1).second) queue.push_back(w);
    }
  }
}

// Distance to root for every vertex of B(r_hi, root), or the closed form.
class RootDistance {
 public:
  RootDistance(const GraphOracle& g, const Vertex& root, std::uint64_t r_hi) : g_(g), root_(root) {
    if (!g.has_metric()) {
      bfs_layers(g, root, r_hi, [&](const Vertex& v, std::uint64_t d) {
        map_.emplace(v, d);
        return true;
      });
    }
  }

  // nullopt means "further than r_hi" in the BFS case.
  std::optional<std::uint64_t> operator()(const Vertex& v) const {
    if (g_.has_metric()) return g_.metric(root_, v);
    auto it = map_.find(v);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

 private:
  const GraphOracle& g_;
  Vertex root_;
  DistanceMap map_;
};

bool in_annulus(const RootDistance& rd, const Vertex& v, std::uint64_t r_lo, std::uint64_t r_hi) {
  const auto d = rd(v);
  return d && *d > r_lo && *d <= r_hi;
}

}  // namespace

std::uint64_t bfs_distance(const GraphOracle& g, const Vertex& u, const Vertex& v) {
  std::optional<std::uint64_t> found;
  bfs_layers(g, u, std::numeric_limits<std::uint64_t>::max(), [&](const Vertex& w, std::uint64_t d) {
    if (w == v) {
      found = d;
      return false;
    }
    return true;
  });
  if (!found) throw ContractViolation("vertices are not connected in '" + g.id() + "'");
  return *found;
}

std::uint64_t distance(const GraphOracle& g, const Vertex& u, const Vertex& v) {
  if (g.has_metric()) return g.metric(u, v);
  return bfs_distance(g, u, v);
}

bool within(const GraphOracle& g, const Vertex& u, const Vertex& v, std::uint64_t r) {
  if (g.has_metric()) return g.metric(u, v) <= r;
  bool hit = false;
  bfs_layers(g, u, r, [&](const Vertex& w, std::uint64_t) {
    hit = (w == v);
    return !hit;
  });
  return hit;
}

std::vector<Vertex> ball(const GraphOracle& g, const Vertex& c, std::uint64_t r) {
  std::vector<Vertex> out;
  bfs_layers(g, c, r, [&](const Vertex& v, std::uint64_t) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::vector<Vertex> sphere(const GraphOracle& g, const Vertex& c, std::uint64_t r) {
  std::vector<Vertex> out;
  bfs_layers(g, c, r, [&](const Vertex& v, std::uint64_t d) {
    if (d == r) out.push_back(v);
    return true;
  });
  return out;
}

std::uint64_t ball_size(const GraphOracle& g, std::uint64_t r) {
  if (g.transitive()) {
    if (auto cached = g.cached_ball_size(r)) return *cached;
    const std::uint64_t size = ball(g, g.root(), r).size();
    g.store_ball_size(r, size);
    return size;
  }
  if (g.has_ball_size_bound()) return g.spec().ball_size_bound(r);
  throw UnsupportedGenerator("graph '" + g.id() +
                             "' is neither transitive nor carries a ball-size bound");
}

Vertex ray_cross(const GraphOracle& g, const Ray& ray, const Vertex& root, std::uint64_t r) {
  if (!ray.monotone()) throw ContractViolation("ray_cross needs a monotone ray");
  const std::uint64_t d0 = distance(g, root, ray.source());
  if (d0 > r) {
    throw ContractViolation("ray source lies outside B(" + std::to_string(r) + ")");
  }
  return ray.at(r - d0);
}

Path Ray::prefix(std::uint64_t last) const {
  Path out;
  out.reserve(last + 1);
  for (std::uint64_t t = 0; t <= last; ++t) out.push_back(at(t));
  return out;
}

std::uint64_t annulus_connect_radius(const GraphOracle& g, const Vertex& root,
                                     const std::vector<Vertex>& X, std::uint64_t r_lo,
                                     std::uint64_t growth_cap) {
  if (X.empty()) throw ContractViolation("annulus_connect_radius needs a nonempty vertex set");
  const std::uint64_t r_max = r_lo + growth_cap;
  const RootDistance rd(g, root, r_max);
  for (const auto& x : X) {
    if (rd(x) != r_lo + 1) throw ContractViolation("connector set must lie on S(r_lo + 1)");
  }

  std::vector<Vertex> nb;
  for (std::uint64_t R = r_lo + 1; R <= r_max; ++R) {
    Budget budget(g);
    std::unordered_set<Vertex, VertexHash> seen{X.front()};
    std::deque<Vertex> queue{X.front()};
    while (!queue.empty()) {
      Vertex v = std::move(queue.front());
      queue.pop_front();
      budget.spend();
      g.neighbors(v, nb);
      for (auto& w : nb) {
        if (!seen.contains(w) && in_annulus(rd, w, r_lo, R)) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
    const bool connected =
        std::all_of(X.begin(), X.end(), [&](const Vertex& x) { return seen.contains(x); });
    if (connected) return R;
  }
  throw GrowthCapExceeded("connector set on S(" + std::to_string(r_lo + 1) +
                          ") stays disconnected up to radius " + std::to_string(r_max));
}

Path annulus_path(const GraphOracle& g, const Vertex& root, const Vertex& p, const Vertex& q,
                  std::uint64_t r_lo, std::uint64_t r_hi, const VertexPredicate& allowed) {
  const RootDistance rd(g, root, r_hi);
  auto admit = [&](const Vertex& v) { return in_annulus(rd, v, r_lo, r_hi) && allowed(v); };
  if (!admit(p) || !admit(q)) {
    throw ContractViolation("annulus_path endpoints must lie in the admitted annulus");
  }
  if (p == q) return {p};

  Budget budget(g);
  std::unordered_map<Vertex, Vertex, VertexHash> parent;
  parent.emplace(p, p);
  std::deque<Vertex> queue{p};
  std::vector<Vertex> nb;
  while (!queue.empty()) {
    Vertex v = std::move(queue.front());
    queue.pop_front();
    budget.spend();
    g.neighbors(v, nb);
    for (auto& w : nb) {
      if (parent.contains(w) || !admit(w)) continue;
      parent.emplace(w, v);
      if (w == q) {
        Path path{q};
        for (Vertex cur = v; cur != p; cur = parent.at(cur)) path.push_back(cur);
        path.push_back(p);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw DisconnectedAnnulus("no admitted path between the endpoints in annulus (" +
                            std::to_string(r_lo) + ", " + std::to_string(r_hi) + "]");
}

}  // namespace cops
