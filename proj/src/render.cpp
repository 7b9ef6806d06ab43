#include "cops/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cops/errors.hpp"

namespace cops {
namespace {

const RoundRecord& record_at(const Trace& trace, std::uint32_t round) {
  if (trace.generator != "grid") throw ContractViolation("snapshots are only drawn for grid traces");
  if (round >= trace.rounds.size()) {
    throw ContractViolation("round " + std::to_string(round) + " out of range (trace has " +
                            std::to_string(trace.rounds.size()) + " records)");
  }
  return trace.rounds[round];
}

std::int64_t l1(const Vertex& a, const Vertex& b) {
  return std::llabs(static_cast<std::int64_t>(a.x()) - b.x()) + std::llabs(static_cast<std::int64_t>(a.y()) - b.y());
}

// The robber's vertex after `round`: the end of its path, the vertex where
// it was caught along the path, or where it stood if caught before moving.
Vertex robber_at(const Trace& trace, std::uint32_t round) {
  const RoundRecord& rec = trace.rounds[round];
  if (rec.status == Status::captured && !rec.robber_path.empty()) {
    const auto rho = static_cast<std::int64_t>(trace.params.rho);
    for (const auto& v : rec.robber_path) {
      for (const auto& c : rec.cops) {
        if (l1(v, c) <= rho) return v;
      }
    }
  }
  for (std::uint32_t r = round + 1; r-- > 0;) {
    const auto& path = trace.rounds[r].robber_path;
    if (!path.empty()) return path.back();
  }
  return trace.params.v0;
}

}  // namespace

Window parse_window(const std::string& text) {
  Window w;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(text);
  if (!(in >> w.x0 >> c1 >> w.y0 >> c2 >> w.x1 >> c3 >> w.y1) || c1 != ',' || c2 != ',' || c3 != ',' ||
      w.x0 > w.x1 || w.y0 > w.y1) {
    throw ConfigError("window must be x0,y0,x1,y1 with x0 <= x1 and y0 <= y1");
  }
  return w;
}

Window default_window(const Trace& trace, std::uint32_t round) {
  const RoundRecord& rec = record_at(trace, round);
  const auto& v0 = trace.params.v0;
  const auto reach = static_cast<std::int32_t>(trace.params.R + 1);
  Window w{v0.x() - reach, v0.y() - reach, v0.x() + reach, v0.y() + reach};
  auto grow = [&](const Vertex& v) {
    w.x0 = std::min(w.x0, v.x() - 1);
    w.y0 = std::min(w.y0, v.y() - 1);
    w.x1 = std::max(w.x1, v.x() + 1);
    w.y1 = std::max(w.y1, v.y() + 1);
  };
  for (const auto& c : rec.cops) grow(c);
  grow(robber_at(trace, round));
  return w;
}

std::string render_snapshot(const Trace& trace, std::uint32_t round, const Window& window) {
  const RoundRecord& rec = record_at(trace, round);
  const Vertex robber = robber_at(trace, round);
  const bool captured = rec.status == Status::captured;
  const Vertex& v0 = trace.params.v0;
  const auto R = static_cast<std::int64_t>(trace.params.R);

  std::string out;
  for (std::int32_t y = window.y1; y >= window.y0; --y) {
    for (std::int32_t x = window.x0; x <= window.x1; ++x) {
      const Vertex v = Vertex::xy(x, y);
      char glyph = '.';
      if (l1(v, v0) == R) glyph = '+';
      if (v == v0) glyph = 'O';
      if (std::find(rec.cops.begin(), rec.cops.end(), v) != rec.cops.end()) glyph = 'C';
      if (v == robber) glyph = captured ? 'X' : 'R';
      out += glyph;
    }
    out += '\n';
  }
  return out;
}

}  // namespace cops
