#pragma once

#include <cstdint>
#include <string>

#include "cops/game.hpp"

namespace cops {

struct Window {
  std::int32_t x0 = 0;
  std::int32_t y0 = 0;
  std::int32_t x1 = 0;
  std::int32_t y1 = 0;
};

/// Parses "x0,y0,x1,y1". Throws ConfigError.
Window parse_window(const std::string& text);

/// Window around B(R, v0) grown to include every piece at `round`.
Window default_window(const Trace& trace, std::uint32_t round);

// Legend: 'O' v0, 'C' cop, 'R' robber, 'X' captured robber, '+' the sphere
// S(R, v0) bounding the target ball, '.' anything else. Rows run from y1 at
// the top down to y0.
std::string render_snapshot(const Trace& trace, std::uint32_t round, const Window& window);

}  // namespace cops
