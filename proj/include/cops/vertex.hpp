#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace cops {

/// Canonical vertex encoding shared by all generators.
///
/// A vertex is a short word of integers whose meaning is fixed by the
/// generator that produced it: (x, y) on the grid, (x) on the line,
/// (x, rail) on the ladder, and the root-to-vertex child-index word on the
/// regular trees. Two vertices of the same generator are equal exactly when
/// their words are equal, and words are ordered lexicographically, which is
/// the tie-break order used by every search in the library.
class Vertex {
 public:
  using Word = boost::container::small_vector<std::int32_t, 2>;

  Vertex() = default;
  Vertex(std::initializer_list<std::int32_t> parts) : word_(parts) {}
  explicit Vertex(Word word) : word_(std::move(word)) {}

  static Vertex xy(std::int32_t x, std::int32_t y) { return Vertex{x, y}; }

  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  std::int32_t operator[](std::size_t i) const { return word_[i]; }
  const Word& word() const noexcept { return word_; }

  std::int32_t x() const { return word_[0]; }
  std::int32_t y() const { return word_[1]; }

  Vertex with(std::int32_t part) const {
    Word w = word_;
    w.push_back(part);
    return Vertex(std::move(w));
  }
  Vertex parent() const {
    Word w = word_;
    w.pop_back();
    return Vertex(std::move(w));
  }

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.word_ == b.word_; }
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(),
                                                  b.word_.begin(), b.word_.end());
  }

 private:
  Word word_;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (std::int32_t part : v.word()) {
      h ^= static_cast<std::uint32_t>(part);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

/// A walk given as its vertex list, start included. Length is the number of
/// edges, so a single-vertex path is the empty (stay) move.
using Path = std::vector<Vertex>;

inline std::size_t path_length(const Path& p) { return p.empty() ? 0 : p.size() - 1; }

}  // namespace cops
