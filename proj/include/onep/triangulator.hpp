#pragma once

// Edge insertion until every region has exactly three corners.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/regions.hpp"
#include "onep/validate.hpp"

namespace onep {

struct InsertionStep {
  Region region;           ///< the region that was split, as it was before the step
  std::size_t corner_a = 0;  ///< positions on region.corners
  std::size_t corner_b = 0;
  VertexId u = 0;
  VertexId v = 0;
  EdgeId new_edge = 0;
};

struct TriangulationResult {
  CombinatorialDrawing drawing;
  std::vector<InsertionStep> steps;
};

/// Σ (degree - 3) over all regions.
inline std::size_t triangulation_potential(const std::vector<Region>& regions) {
  std::size_t total = 0;
  for (const Region& r : regions) total += r.degree() > 3 ? r.degree() - 3 : 0;
  return total;
}

inline bool is_triangulated(const CombinatorialDrawing& d) {
  require_valid(d, "is_triangulated");
  const auto regions = detail::regions_unchecked(d);
  return std::all_of(regions.begin(), regions.end(), [](const Region& r) { return r.degree() == 3; });
}

namespace detail {

inline std::size_t cyclic_distance(std::size_t a, std::size_t b, std::size_t n) {
  const std::size_t forward = a < b ? b - a : a - b;
  return std::min(forward, n - forward);
}

inline CombinatorialDrawing insert_edge_unchecked(const CombinatorialDrawing& d, const Region& region,
                                                  std::size_t a, std::size_t b) {
  const Corner& ca = region.corners[a];
  const Corner& cb = region.corners[b];
  DrawingParts parts = DrawingParts::of(d);
  const auto e = static_cast<EdgeId>(parts.edges.size());
  parts.edges.push_back(Edge{{ca.id, cb.id}});
  // The region's wedge at a corner lies just before the half-edge leaving it.
  parts.insert_before(ca.id, ca.leaving, HalfEdge{e, 0});
  parts.insert_before(cb.id, cb.leaving, HalfEdge{e, 1});
  if (parts.has_parallel_or_loop()) parts.mode = GraphMode::multigraph;
  return std::move(parts).build();
}

// Lexicographically least admissible pair; a loop only when nothing else fits.
inline std::optional<std::pair<std::size_t, std::size_t>> choose_corner_pair(const Region& r) {
  using Key = std::tuple<bool, std::uint32_t, std::uint32_t, std::size_t, std::size_t>;
  std::optional<Key> best;
  const std::size_t n = r.degree();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!r.corners[i].is_vertex() || !r.corners[j].is_vertex()) continue;
      if (cyclic_distance(i, j, n) < 2) continue;
      const auto lo = std::min(r.corners[i].id, r.corners[j].id);
      const auto hi = std::max(r.corners[i].id, r.corners[j].id);
      const Key key{lo == hi, lo, hi, i, j};
      if (!best || key < *best) best = key;
    }
  }
  if (!best) return std::nullopt;
  return std::pair{std::get<3>(*best), std::get<4>(*best)};
}

}  // namespace detail

/// Adds an uncrossed edge through `region` between two of its vertex corners,
/// given as positions on region.corners. The region splits into two regions of
/// degrees summing to degree + 2.
inline CombinatorialDrawing insert_edge_in_region(const CombinatorialDrawing& d, const Region& region,
                                                  std::size_t corner_a, std::size_t corner_b) {
  require_valid(d, "insert_edge_in_region");
  const std::size_t n = region.degree();
  if (corner_a >= n || corner_b >= n) {
    throw PreconditionError("insert_edge_in_region: corner not on region");
  }
  const auto regions = detail::regions_unchecked(d);
  if (std::find(regions.begin(), regions.end(), region) == regions.end()) {
    throw PreconditionError("insert_edge_in_region: region is not a region of the drawing");
  }
  if (!region.corners[corner_a].is_vertex() || !region.corners[corner_b].is_vertex()) {
    throw PreconditionError("insert_edge_in_region: corner is a crossing, not a vertex");
  }
  if (detail::cyclic_distance(corner_a, corner_b, n) < 2) {
    throw PreconditionError("insert_edge_in_region: corners are consecutive on the region");
  }
  return detail::insert_edge_unchecked(d, region, corner_a, corner_b);
}

/// Inserts edges one region at a time until every region is a triangle.
/// Regions are visited in canonical order; the output is in multigraph mode.
inline TriangulationResult triangulate(const CombinatorialDrawing& d) {
  const auto report = validate(d);
  if (!report.accepted()) {
    throw PreconditionError(std::string("triangulate: drawing rejected (") +
                            to_string(report.violations.front().kind) + ": " +
                            report.violations.front().message + ")");
  }
  TriangulationResult result;
  result.drawing = d;
  for (;;) {
    const auto regions = detail::regions_unchecked(result.drawing);
    const Region* target = nullptr;
    for (const Region& r : regions) {
      if (r.degree() < 3) {
        std::ostringstream msg;
        msg << "triangulate: region of degree " << r.degree() << " at";
        for (const Corner& c : r.corners) msg << ' ' << c;
        throw PreconditionError(msg.str());
      }
      if (target == nullptr && r.degree() > 3) target = &r;
    }
    if (target == nullptr) break;
    const auto pair = detail::choose_corner_pair(*target);
    if (!pair) {
      // Unreachable for good drawings: no two crossing corners are adjacent.
      throw PreconditionError("triangulate: region without admissible corner pair");
    }
    InsertionStep step;
    step.region = *target;
    step.corner_a = pair->first;
    step.corner_b = pair->second;
    step.u = target->corners[pair->first].id;
    step.v = target->corners[pair->second].id;
    step.new_edge = static_cast<EdgeId>(result.drawing.edge_count());
    result.drawing = detail::insert_edge_unchecked(result.drawing, *target, pair->first, pair->second);
    result.steps.push_back(std::move(step));
  }
  if (result.drawing.mode() != GraphMode::multigraph) {
    DrawingParts parts = DrawingParts::of(result.drawing);
    parts.mode = GraphMode::multigraph;
    result.drawing = std::move(parts).build();
  }
  return result;
}

}  // namespace onep
