#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cops/graph.hpp"
#include "cops/rays.hpp"

namespace cops {

/// A graph together with the witness for the end the haven robber plays in.
struct Arena {
  GraphOracle graph;
  RaySystem rays;
};

/// Z^2 with the 4-neighbourhood. One thick end.
///
/// disjoint_family(count) returns the vertical rays {(j, t) : t >= 0} for
/// j = -m..m with the least m such that 2m + 1 >= count, so R_0 = m.
/// outward_ray(x, y) runs along the axis of the larger absolute coordinate,
/// away from the origin, preferring the x-axis on ties.
Arena make_grid();

/// Z. Two thin ends; the witnessed end is the positive one.
Arena make_line();

/// Z x {0, 1}. Two ends of degree 2; the witnessed end is the positive one.
Arena make_ladder();

/// d-regular tree, d >= 3. Every end has degree 1; the witnessed end is the
/// ray through child 0 at every level.
Arena make_tree(int degree);

/// Builds an arena from its identifier: "grid", "line", "ladder", "tree3",
/// "tree4". Throws UnsupportedGenerator for anything else.
Arena make_arena(std::string_view id);

std::vector<std::string> generator_ids();

}  // namespace cops
