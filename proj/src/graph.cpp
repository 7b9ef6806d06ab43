#include "cops/graph.hpp"

#include <algorithm>

#include "cops/errors.hpp"

namespace cops {

GraphOracle::GraphOracle(GraphSpec spec) : spec_(std::move(spec)), memo_(std::make_shared<Memo>()) {
  if (!spec_.neighbors) throw ContractViolation("graph '" + spec_.id + "' has no neighbour function");
  if (spec_.degree_bound == 0) throw ContractViolation("graph '" + spec_.id + "' has no degree bound");
  if (!spec_.encode || !spec_.decode) throw ContractViolation("graph '" + spec_.id + "' has no vertex codec");
}

std::vector<Vertex> GraphOracle::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  spec_.neighbors(v, out);
  return out;
}

void GraphOracle::neighbors(const Vertex& v, std::vector<Vertex>& out) const {
  out.clear();
  spec_.neighbors(v, out);
}

bool GraphOracle::adjacent(const Vertex& u, const Vertex& v) const {
  const auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

GraphOracle GraphOracle::without_metric() const {
  GraphOracle copy = *this;
  copy.spec_.metric = nullptr;
  return copy;
}

GraphOracle GraphOracle::with_budget(std::uint64_t budget) const {
  GraphOracle copy = *this;
  copy.spec_.search_budget = budget;
  return copy;
}

std::optional<std::uint64_t> GraphOracle::cached_ball_size(std::uint64_t r) const {
  std::lock_guard lock(memo_->mutex);
  auto it = memo_->ball_sizes.find(r);
  if (it == memo_->ball_sizes.end()) return std::nullopt;
  return it->second;
}

void GraphOracle::store_ball_size(std::uint64_t r, std::uint64_t size) const {
  constexpr std::size_t kMaxEntries = 4096;
  std::lock_guard lock(memo_->mutex);
  if (memo_->ball_sizes.size() < kMaxEntries) memo_->ball_sizes.emplace(r, size);
}

}  // namespace cops
