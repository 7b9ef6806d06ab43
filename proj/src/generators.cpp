#include "cops/generators.hpp"

#include <charconv>
#include <cstdlib>

#include "cops/errors.hpp"

namespace cops {
namespace {

std::uint64_t absdiff(std::int64_t a, std::int64_t b) {
  return static_cast<std::uint64_t>(a > b ? a - b : b - a);
}

std::int32_t sign_or_plus(std::int32_t v) { return v < 0 ? -1 : 1; }

bool parse_int(std::string_view text, std::int32_t& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// "(a,b)" with integer parts.
std::optional<std::pair<std::int32_t, std::int32_t>> parse_pair(std::string_view text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  std::int32_t a = 0;
  std::int32_t b = 0;
  if (!parse_int(text.substr(0, comma), a) || !parse_int(text.substr(comma + 1), b)) return std::nullopt;
  return std::pair{a, b};
}

std::string pair_text(const Vertex& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
}

Ray straight_ray(Vertex source, std::size_t axis, std::int32_t dir) {
  return Ray(
      [source, axis, dir](std::uint64_t t) {
        auto w = source.word();
        w[axis] += dir * static_cast<std::int32_t>(t);
        return Vertex(std::move(w));
      },
      true);
}

}  // namespace

Arena make_grid() {
  GraphSpec spec;
  spec.id = "grid";
  spec.root = Vertex::xy(0, 0);
  spec.neighbors = [](const Vertex& v, std::vector<Vertex>& out) {
    const auto x = v.x();
    const auto y = v.y();
    out.push_back(Vertex::xy(x - 1, y));
    out.push_back(Vertex::xy(x, y - 1));
    out.push_back(Vertex::xy(x, y + 1));
    out.push_back(Vertex::xy(x + 1, y));
  };
  spec.degree_bound = 4;
  spec.transitive = true;
  spec.metric = [](const Vertex& u, const Vertex& v) {
    return absdiff(u.x(), v.x()) + absdiff(u.y(), v.y());
  };
  spec.encode = pair_text;
  spec.decode = [](std::string_view text) -> std::optional<Vertex> {
    auto p = parse_pair(text);
    if (!p) return std::nullopt;
    return Vertex::xy(p->first, p->second);
  };

  RaySystem rays;
  rays.root = spec.root;
  rays.disjoint_family = [](std::uint64_t count) -> std::optional<RayFamily> {
    const std::uint64_t m = count == 0 ? 0 : count / 2;  // least m with 2m + 1 >= count
    RayFamily fam;
    fam.radius = m;
    const auto half = static_cast<std::int32_t>(m);
    for (std::int32_t j = -half; j <= half; ++j) fam.rays.push_back(straight_ray(Vertex::xy(j, 0), 1, 1));
    return fam;
  };
  rays.outward_ray = [](const Vertex& v) -> std::optional<Ray> {
    if (std::abs(static_cast<std::int64_t>(v.x())) >= std::abs(static_cast<std::int64_t>(v.y()))) {
      return straight_ray(v, 0, sign_or_plus(v.x()));
    }
    return straight_ray(v, 1, sign_or_plus(v.y()));
  };
  return Arena{GraphOracle(std::move(spec)), std::move(rays)};
}

Arena make_line() {
  GraphSpec spec;
  spec.id = "line";
  spec.root = Vertex{0};
  spec.neighbors = [](const Vertex& v, std::vector<Vertex>& out) {
    out.push_back(Vertex{v[0] - 1});
    out.push_back(Vertex{v[0] + 1});
  };
  spec.degree_bound = 2;
  spec.transitive = true;
  spec.metric = [](const Vertex& u, const Vertex& v) { return absdiff(u[0], v[0]); };
  spec.encode = [](const Vertex& v) { return std::to_string(v[0]); };
  spec.decode = [](std::string_view text) -> std::optional<Vertex> {
    std::int32_t x = 0;
    if (!parse_int(text, x)) return std::nullopt;
    return Vertex{x};
  };

  RaySystem rays;
  rays.root = spec.root;
  rays.disjoint_family = [](std::uint64_t count) -> std::optional<RayFamily> {
    if (count > 1) return std::nullopt;
    return RayFamily{0, {straight_ray(Vertex{0}, 0, 1)}};
  };
  rays.outward_ray = [](const Vertex& v) -> std::optional<Ray> {
    if (v[0] < 0) return std::nullopt;
    return straight_ray(v, 0, 1);
  };
  return Arena{GraphOracle(std::move(spec)), std::move(rays)};
}

Arena make_ladder() {
  GraphSpec spec;
  spec.id = "ladder";
  spec.root = Vertex{0, 0};
  spec.neighbors = [](const Vertex& v, std::vector<Vertex>& out) {
    const auto x = v[0];
    const auto rail = v[1];
    out.push_back(Vertex{x - 1, rail});
    if (rail == 1) out.push_back(Vertex{x, 0});
    if (rail == 0) out.push_back(Vertex{x, 1});
    out.push_back(Vertex{x + 1, rail});
  };
  spec.degree_bound = 3;
  spec.transitive = true;
  spec.metric = [](const Vertex& u, const Vertex& v) {
    return absdiff(u[0], v[0]) + absdiff(u[1], v[1]);
  };
  spec.encode = pair_text;
  spec.decode = [](std::string_view text) -> std::optional<Vertex> {
    auto p = parse_pair(text);
    if (!p || (p->second != 0 && p->second != 1)) return std::nullopt;
    return Vertex{p->first, p->second};
  };

  RaySystem rays;
  rays.root = spec.root;
  rays.disjoint_family = [](std::uint64_t count) -> std::optional<RayFamily> {
    if (count > 2) return std::nullopt;
    RayFamily fam;
    fam.rays.push_back(straight_ray(Vertex{0, 0}, 0, 1));
    if (count == 2) {
      fam.radius = 1;
      fam.rays.push_back(straight_ray(Vertex{0, 1}, 0, 1));
    }
    return fam;
  };
  rays.outward_ray = [](const Vertex& v) -> std::optional<Ray> {
    if (v[0] < 0) return std::nullopt;
    return straight_ray(v, 0, 1);
  };
  return Arena{GraphOracle(std::move(spec)), std::move(rays)};
}

Arena make_tree(int degree) {
  if (degree < 3) throw UnsupportedGenerator("regular trees need degree >= 3");
  GraphSpec spec;
  spec.id = "tree" + std::to_string(degree);
  spec.root = Vertex{};
  // Root children are 0..d-1; every other vertex has children 0..d-2.
  spec.neighbors = [degree](const Vertex& v, std::vector<Vertex>& out) {
    if (!v.empty()) out.push_back(v.parent());
    const int children = v.empty() ? degree : degree - 1;
    for (int c = 0; c < children; ++c) out.push_back(v.with(c));
  };
  spec.degree_bound = static_cast<std::size_t>(degree);
  spec.transitive = true;
  spec.metric = [](const Vertex& u, const Vertex& v) {
    std::size_t common = 0;
    while (common < u.size() && common < v.size() && u[common] == v[common]) ++common;
    return static_cast<std::uint64_t>(u.size() + v.size() - 2 * common);
  };
  spec.encode = [](const Vertex& v) {
    std::string s = "^";
    for (auto c : v.word()) s += static_cast<char>('0' + c);
    return s;
  };
  spec.decode = [degree](std::string_view text) -> std::optional<Vertex> {
    if (text.empty() || text.front() != '^') return std::nullopt;
    Vertex::Word w;
    for (std::size_t i = 1; i < text.size(); ++i) {
      const int c = text[i] - '0';
      const int limit = (i == 1) ? degree : degree - 1;
      if (c < 0 || c >= limit) return std::nullopt;
      w.push_back(c);
    }
    return Vertex(std::move(w));
  };

  RaySystem rays;
  rays.root = spec.root;
  auto zero_ray = [](Vertex from) {
    return Ray(
        [from](std::uint64_t t) {
          auto w = from.word();
          w.insert(w.end(), t, 0);
          return Vertex(std::move(w));
        },
        true);
  };
  rays.disjoint_family = [zero_ray](std::uint64_t count) -> std::optional<RayFamily> {
    if (count > 1) return std::nullopt;
    return RayFamily{0, {zero_ray(Vertex{})}};
  };
  rays.outward_ray = [zero_ray](const Vertex& v) -> std::optional<Ray> {
    for (auto c : v.word()) {
      if (c != 0) return std::nullopt;
    }
    return zero_ray(v);
  };
  return Arena{GraphOracle(std::move(spec)), std::move(rays)};
}

Arena make_arena(std::string_view id) {
  if (id == "grid") return make_grid();
  if (id == "line") return make_line();
  if (id == "ladder") return make_ladder();
  if (id == "tree3") return make_tree(3);
  if (id == "tree4") return make_tree(4);
  throw UnsupportedGenerator("unknown generator '" + std::string(id) + "'");
}

std::vector<std::string> generator_ids() { return {"grid", "line", "ladder", "tree3", "tree4"}; }

}  // namespace cops
