#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cops/vertex.hpp"

namespace cops {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Everything a generator has to provide to be searched lazily.
struct GraphSpec {
  std::string id;
  Vertex root;
  /// Appends the neighbours of v in ascending vertex order.
  std::function<void(const Vertex&, std::vector<Vertex>&)> neighbors;
  std::size_t degree_bound = 0;
  bool transitive = false;
  /// Declared upper bound on |B(n, v)| for graphs that are not transitive.
  std::function<std::uint64_t(std::uint64_t)> ball_size_bound;
  /// Closed-form geodesic distance. Optional; searches fall back to BFS.
  std::function<std::uint64_t(const Vertex&, const Vertex&)> metric;
  std::function<std::string(const Vertex&)> encode;
  std::function<std::optional<Vertex>(std::string_view)> decode;
  std::uint64_t search_budget = kDefaultSearchBudget;
};

/// Immutable, lazily evaluated locally finite graph.
///
/// Copies share the ball-size memo, which is internally synchronised and
/// only ever caches values that are a pure function of the radius.
class GraphOracle {
 public:
  explicit GraphOracle(GraphSpec spec);

  const std::string& id() const noexcept { return spec_.id; }
  const Vertex& root() const noexcept { return spec_.root; }
  std::size_t degree_bound() const noexcept { return spec_.degree_bound; }
  bool transitive() const noexcept { return spec_.transitive; }
  bool has_ball_size_bound() const noexcept { return static_cast<bool>(spec_.ball_size_bound); }
  bool has_metric() const noexcept { return static_cast<bool>(spec_.metric); }
  std::uint64_t search_budget() const noexcept { return spec_.search_budget; }
  const GraphSpec& spec() const noexcept { return spec_; }

  std::vector<Vertex> neighbors(const Vertex& v) const;
  void neighbors(const Vertex& v, std::vector<Vertex>& out) const;
  bool adjacent(const Vertex& u, const Vertex& v) const;

  /// Closed-form distance; only valid when has_metric().
  std::uint64_t metric(const Vertex& u, const Vertex& v) const { return spec_.metric(u, v); }

  std::string encode(const Vertex& v) const { return spec_.encode(v); }
  std::optional<Vertex> decode(std::string_view text) const { return spec_.decode(text); }

  /// Returns a copy with the closed-form metric removed, so every distance
  /// query goes through breadth-first search.
  GraphOracle without_metric() const;
  GraphOracle with_budget(std::uint64_t budget) const;

  std::optional<std::uint64_t> cached_ball_size(std::uint64_t r) const;
  void store_ball_size(std::uint64_t r, std::uint64_t size) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::uint64_t, std::uint64_t> ball_sizes;
  };

  GraphSpec spec_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace cops
