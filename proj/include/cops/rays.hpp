#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cops/vertex.hpp"

namespace cops {

/// A one-sided infinite path, generated on demand.
class Ray {
 public:
  using Step = std::function<Vertex(std::uint64_t)>;

  Ray(Step step, bool monotone) : source_(step(0)), step_(std::move(step)), monotone_(monotone) {}

  const Vertex& source() const noexcept { return source_; }
  Vertex at(std::uint64_t t) const { return t == 0 ? source_ : step_(t); }
  bool monotone() const noexcept { return monotone_; }

  /// Vertices step(0..last) inclusive.
  Path prefix(std::uint64_t last) const;

 private:
  Vertex source_;
  Step step_;
  bool monotone_;
};

struct RayFamily {
  std::uint64_t radius = 0;  ///< every source lies in B(radius, root)
  std::vector<Ray> rays;
};

/// Trusted witness for one end of a generator: disjoint monotone ray
/// families and outward rays, all belonging to that end.
struct RaySystem {
  Vertex root;
  /// nullopt when the end cannot supply `count` disjoint rays.
  std::function<std::optional<RayFamily>(std::uint64_t count)> disjoint_family;
  /// Monotone ray starting at v, when v has one inside the witnessed end.
  std::function<std::optional<Ray>(const Vertex&)> outward_ray;
};

/// The vertex where a monotone ray crosses S(r, root).
/// Throws ContractViolation for a non-monotone ray or a source beyond r.
Vertex ray_cross(const class GraphOracle& g, const Ray& ray, const Vertex& root, std::uint64_t r);

}  // namespace cops
