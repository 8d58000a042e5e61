#pragma once

// Regions of a drawing: the faces of its planarization, reported with the
// crossings as corners in their own right.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/skeleton.hpp"

namespace onep {

struct Corner {
  enum class Kind : std::uint8_t { vertex, crossing };

  Kind kind = Kind::vertex;
  /// Vertex id, or index into the drawing's crossing records.
  std::uint32_t id = 0;
  /// The boundary leaves this corner along `leaving`. For a vertex corner it is
  /// the half-edge anchored at the vertex; for a crossing corner it is the
  /// segment heading toward endpoint `leaving.end`.
  HalfEdge leaving;

  [[nodiscard]] bool is_vertex() const noexcept { return kind == Kind::vertex; }

  friend auto operator<=>(const Corner&, const Corner&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Corner& c) {
  return os << (c.is_vertex() ? "v" : "x") << c.id;
}

/// A face of the drawing. Corners are listed in boundary-walk order, which
/// keeps the region on the left, starting at the lexicographically least
/// corner. A vertex visited twice by the walk contributes two corners.
struct Region {
  std::vector<Corner> corners;

  [[nodiscard]] std::size_t degree() const noexcept { return corners.size(); }
  [[nodiscard]] bool uncrossed() const noexcept {
    return std::all_of(corners.begin(), corners.end(), [](const Corner& c) { return c.is_vertex(); });
  }
  [[nodiscard]] bool is_uncrossed_triangle() const noexcept { return degree() == 3 && uncrossed(); }

  friend auto operator<=>(const Region&, const Region&) = default;
};

namespace detail {

inline Region region_from_orbit(const PlanarSkeleton& s, const std::vector<HalfEdge>& orbit) {
  Region r;
  r.corners.reserve(orbit.size());
  for (const HalfEdge piece : orbit) {
    const VertexId v = s.skeleton.origin(piece);
    Corner c;
    if (s.is_dummy(v)) {
      c.kind = Corner::Kind::crossing;
      c.id = static_cast<std::uint32_t>(s.crossing_of_dummy(v));
    } else {
      c.kind = Corner::Kind::vertex;
      c.id = v;
    }
    c.leaving = s.to_original(piece);
    r.corners.push_back(c);
  }
  // Start at the least rotation; `leaving` makes every corner distinct.
  auto best = r.corners;
  auto trial = r.corners;
  for (std::size_t i = 1; i < trial.size(); ++i) {
    std::rotate(trial.begin(), trial.begin() + 1, trial.end());
    if (trial < best) best = trial;
  }
  r.corners = std::move(best);
  return r;
}

// Regions in canonical order. Expects consistent rotations and valid crossings.
inline std::vector<Region> regions_unchecked(const CombinatorialDrawing& d) {
  const PlanarSkeleton s = planarize_unchecked(d);
  std::vector<Region> regions;
  for (const auto& orbit : face_orbits(s.skeleton)) regions.push_back(region_from_orbit(s, orbit));
  std::sort(regions.begin(), regions.end());
  return regions;
}

}  // namespace detail

/// Regions in ascending canonical order. Requires rotations and crossings that
/// planarize accepts; full goodness is checked by validate().
inline std::vector<Region> enumerate_regions(const CombinatorialDrawing& d) {
  const PlanarSkeleton s = planarize(d);
  std::vector<Region> regions;
  for (const auto& orbit : detail::face_orbits(s.skeleton)) {
    regions.push_back(detail::region_from_orbit(s, orbit));
  }
  std::sort(regions.begin(), regions.end());
  return regions;
}

}  // namespace onep
