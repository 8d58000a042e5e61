#pragma once

// Combinatorial model of a drawing on the sphere: vertices, edges, clockwise
// rotations of edge-ends around every vertex, and crossing records.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace onep {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised when identifiers inside a drawing do not resolve.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called on a drawing outside its domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One end of an edge. `end` selects endpoint 0 or 1 of the edge record.
///
/// Inside a rotation the half-edge is anchored at that endpoint. Inside a
/// CrossingRecord it names the segment of the edge running from the crossing
/// toward that endpoint.
struct HalfEdge {
  EdgeId edge = 0;
  std::uint8_t end = 0;

  [[nodiscard]] constexpr HalfEdge opposite() const noexcept {
    return {edge, static_cast<std::uint8_t>(end ^ 1U)};
  }
  [[nodiscard]] constexpr std::size_t dart() const noexcept {
    return 2 * static_cast<std::size_t>(edge) + end;
  }
  [[nodiscard]] static constexpr HalfEdge from_dart(std::size_t dart) noexcept {
    return {static_cast<EdgeId>(dart / 2), static_cast<std::uint8_t>(dart % 2)};
  }

  friend constexpr auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct Edge {
  std::array<VertexId, 2> ends{};

  [[nodiscard]] constexpr bool is_loop() const noexcept { return ends[0] == ends[1]; }
  [[nodiscard]] constexpr bool touches(VertexId v) const noexcept {
    return ends[0] == v || ends[1] == v;
  }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Clockwise around the crossing point the four segment-ends read
/// first, second, first.opposite(), second.opposite().
struct CrossingRecord {
  HalfEdge first;
  HalfEdge second;

  [[nodiscard]] constexpr std::array<HalfEdge, 4> clockwise() const noexcept {
    return {first, second, first.opposite(), second.opposite()};
  }
  /// The same crossing written from its least segment-end.
  [[nodiscard]] constexpr CrossingRecord canonical() const noexcept {
    const auto cw = clockwise();
    std::size_t start = 0;
    for (std::size_t i = 1; i < 4; ++i) {
      if (cw[i] < cw[start]) start = i;
    }
    return {cw[start], cw[(start + 1) % 4]};
  }

  friend constexpr auto operator<=>(const CrossingRecord&, const CrossingRecord&) = default;
};

enum class GraphMode { simple, multigraph };

inline const char* to_string(GraphMode mode) {
  return mode == GraphMode::simple ? "simple" : "multigraph";
}

/// Immutable value describing a drawing combinatorially.
///
/// Construction only checks that identifiers resolve; everything else
/// (rotation consistency, goodness, connectivity, sphere embedding) is the
/// job of validate(). Rotations and crossing records are stored in canonical
/// form, so operator== compares drawings up to the choice of starting point
/// of each cyclic sequence.
class CombinatorialDrawing {
 public:
  CombinatorialDrawing() = default;

  CombinatorialDrawing(std::size_t vertex_count, std::vector<Edge> edges,
                       std::vector<std::vector<HalfEdge>> rotations,
                       std::vector<CrossingRecord> crossings,
                       GraphMode mode = GraphMode::simple)
      : vertex_count_(vertex_count),
        edges_(std::move(edges)),
        rotations_(std::move(rotations)),
        crossings_(std::move(crossings)),
        mode_(mode) {
    check_structure();
    canonicalize();
    index();
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] std::size_t crossing_count() const noexcept { return crossings_.size(); }
  [[nodiscard]] GraphMode mode() const noexcept { return mode_; }

  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(e); }
  [[nodiscard]] const std::vector<std::vector<HalfEdge>>& rotations() const noexcept {
    return rotations_;
  }
  [[nodiscard]] const std::vector<HalfEdge>& rotation(VertexId v) const {
    return rotations_.at(v);
  }
  [[nodiscard]] const std::vector<CrossingRecord>& crossings() const noexcept {
    return crossings_;
  }

  /// Number of edge-ends at v; a loop contributes two.
  [[nodiscard]] std::size_t degree(VertexId v) const { return rotations_.at(v).size(); }

  [[nodiscard]] VertexId origin(HalfEdge h) const { return edges_.at(h.edge).ends[h.end]; }
  [[nodiscard]] VertexId target(HalfEdge h) const {
    return edges_.at(h.edge).ends[h.end ^ 1U];
  }

  /// Index of the first crossing record mentioning e, if any.
  [[nodiscard]] std::optional<std::size_t> crossing_of(EdgeId e) const {
    const auto c = crossing_of_.at(e);
    if (c == npos) return std::nullopt;
    return c;
  }
  [[nodiscard]] bool is_crossed(EdgeId e) const { return crossing_of_.at(e) != npos; }

  /// Position of h inside the rotation of its origin, if h sits there once.
  [[nodiscard]] std::optional<std::size_t> position(HalfEdge h) const {
    const auto p = position_.at(h.dart());
    if (p == npos) return std::nullopt;
    return p;
  }

  /// Clockwise successor of h around its origin. Requires consistent rotations.
  [[nodiscard]] HalfEdge next_clockwise(HalfEdge h) const {
    const auto& rot = rotations_[origin(h)];
    return rot[(position_.at(h.dart()) + 1) % rot.size()];
  }
  [[nodiscard]] HalfEdge prev_clockwise(HalfEdge h) const {
    const auto& rot = rotations_[origin(h)];
    return rot[(position_.at(h.dart()) + rot.size() - 1) % rot.size()];
  }

  /// True when every half-edge sits exactly once in the rotation of its origin.
  [[nodiscard]] bool rotations_consistent() const noexcept { return consistent_; }

  [[nodiscard]] std::size_t min_degree() const {
    std::size_t best = vertex_count_ == 0 ? 0 : rotations_[0].size();
    for (const auto& rot : rotations_) best = std::min(best, rot.size());
    return best;
  }

  friend bool operator==(const CombinatorialDrawing& a, const CombinatorialDrawing& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           a.rotations_ == b.rotations_ && a.crossings_ == b.crossings_ &&
           a.mode_ == b.mode_;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void check_structure() const {
    if (rotations_.size() != vertex_count_) {
      std::ostringstream msg;
      msg << "expected " << vertex_count_ << " rotations, got " << rotations_.size();
      throw StructuralError(msg.str());
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      for (const VertexId v : edges_[e].ends) {
        if (v >= vertex_count_) {
          throw StructuralError("edge " + std::to_string(e) + " references unknown vertex " +
                                std::to_string(v));
        }
      }
    }
    const auto check_half = [this](HalfEdge h, const std::string& where) {
      if (h.edge >= edges_.size() || h.end > 1) {
        throw StructuralError(where + " references unknown half-edge " +
                              std::to_string(h.edge) + "." + std::to_string(h.end));
      }
    };
    for (std::size_t v = 0; v < rotations_.size(); ++v) {
      for (const HalfEdge h : rotations_[v]) check_half(h, "rotation of vertex " + std::to_string(v));
    }
    for (std::size_t c = 0; c < crossings_.size(); ++c) {
      check_half(crossings_[c].first, "crossing " + std::to_string(c));
      check_half(crossings_[c].second, "crossing " + std::to_string(c));
    }
  }

  void canonicalize() {
    for (auto& rot : rotations_) {
      if (rot.empty()) continue;
      std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    }
    for (auto& rec : crossings_) rec = rec.canonical();
    std::sort(crossings_.begin(), crossings_.end());
  }

  void index() {
    position_.assign(2 * edges_.size(), npos);
    consistent_ = true;
    std::vector<int> seen(2 * edges_.size(), 0);
    for (std::size_t v = 0; v < rotations_.size(); ++v) {
      for (std::size_t i = 0; i < rotations_[v].size(); ++i) {
        const HalfEdge h = rotations_[v][i];
        ++seen[h.dart()];
        if (origin(h) == v) position_[h.dart()] = i;
        else consistent_ = false;
      }
    }
    for (const int s : seen) {
      if (s != 1) consistent_ = false;
    }
    if (!consistent_) {
      // Positions are only trustworthy for half-edges seen exactly once.
      for (std::size_t d = 0; d < seen.size(); ++d) {
        if (seen[d] != 1) position_[d] = npos;
      }
    }
    crossing_of_.assign(edges_.size(), npos);
    for (std::size_t c = 0; c < crossings_.size(); ++c) {
      for (const EdgeId e : {crossings_[c].first.edge, crossings_[c].second.edge}) {
        if (crossing_of_[e] == npos) crossing_of_[e] = c;
      }
    }
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> rotations_;
  std::vector<CrossingRecord> crossings_;
  GraphMode mode_ = GraphMode::simple;

  std::vector<std::size_t> position_;
  std::vector<std::size_t> crossing_of_;
  bool consistent_ = false;
};

/// Mutable scratch form used by operations that derive new drawings.
struct DrawingParts {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<HalfEdge>> rotations;
  std::vector<CrossingRecord> crossings;
  GraphMode mode = GraphMode::simple;

  [[nodiscard]] static DrawingParts of(const CombinatorialDrawing& d) {
    return {d.vertex_count(), d.edges(), d.rotations(), d.crossings(), d.mode()};
  }
  [[nodiscard]] CombinatorialDrawing build() && {
    return {vertex_count, std::move(edges), std::move(rotations), std::move(crossings), mode};
  }

  /// Insert `h` into the rotation of v immediately before `before`.
  void insert_before(VertexId v, HalfEdge before, HalfEdge h) {
    auto& rot = rotations.at(v);
    const auto it = std::find(rot.begin(), rot.end(), before);
    if (it == rot.end()) throw PreconditionError("half-edge not found in rotation");
    rot.insert(it, h);
  }

  [[nodiscard]] bool has_parallel_or_loop() const {
    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.is_loop()) return true;
      keys.emplace_back(std::min(e.ends[0], e.ends[1]), std::max(e.ends[0], e.ends[1]));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
  }
};

}  // namespace onep
