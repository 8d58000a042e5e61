#pragma once

// Planarization: every crossing becomes a degree-4 dummy vertex and each
// crossed edge is split into two pieces.

#include <cstddef>
#include <vector>

#include "onep/drawing.hpp"

namespace onep {

struct PlanarSkeleton {
  CombinatorialDrawing skeleton;
  std::size_t original_vertex_count = 0;
  std::size_t original_edge_count = 0;
  GraphMode original_mode = GraphMode::simple;
  /// Skeleton edge id -> original edge id.
  std::vector<EdgeId> piece_to_edge;

  /// Dummy vertices are numbered after the originals, one per crossing.
  [[nodiscard]] bool is_dummy(VertexId v) const noexcept { return v >= original_vertex_count; }
  [[nodiscard]] std::size_t crossing_of_dummy(VertexId v) const noexcept {
    return v - original_vertex_count;
  }
  [[nodiscard]] std::size_t dummy_count() const noexcept {
    return skeleton.vertex_count() - original_vertex_count;
  }

  /// Translate a skeleton half-edge to original terms. At an original vertex
  /// this is the half-edge anchored there; at a dummy it is the segment
  /// leaving the crossing, named by the endpoint it heads toward.
  [[nodiscard]] HalfEdge to_original(HalfEdge piece) const {
    const EdgeId e = piece_to_edge.at(piece.edge);
    if (is_dummy(skeleton.origin(piece))) return {e, static_cast<std::uint8_t>(piece.end ^ 1U)};
    return {e, piece.end};
  }
};

namespace detail {

// Skeleton construction without checking goodness. Edge e keeps its id for the
// piece at endpoint 0; crossing c appends pieces m+2c (first edge) and m+2c+1
// (second edge) for the endpoint-1 side.
inline PlanarSkeleton planarize_unchecked(const CombinatorialDrawing& d) {
  const std::size_t n = d.vertex_count();
  const std::size_t m = d.edge_count();
  const std::size_t x = d.crossing_count();

  DrawingParts parts;
  parts.vertex_count = n + x;
  parts.mode = d.mode();
  parts.edges = d.edges();
  parts.edges.resize(m + 2 * x);
  parts.rotations = d.rotations();
  parts.rotations.resize(n + x);

  std::vector<EdgeId> piece_to_edge(m + 2 * x);
  for (std::size_t e = 0; e < m; ++e) piece_to_edge[e] = static_cast<EdgeId>(e);

  for (std::size_t c = 0; c < x; ++c) {
    const auto dummy = static_cast<VertexId>(n + c);
    const CrossingRecord& rec = d.crossings()[c];
    std::array<EdgeId, 2> tail_piece{};
    for (int j = 0; j < 2; ++j) {
      const EdgeId e = (j == 0 ? rec.first : rec.second).edge;
      const auto piece = static_cast<EdgeId>(m + 2 * c + static_cast<std::size_t>(j));
      tail_piece[j] = piece;
      piece_to_edge[piece] = e;
      const VertexId far = d.edge(e).ends[1];
      parts.edges[piece] = Edge{{dummy, far}};
      parts.edges[e].ends[1] = dummy;
      for (HalfEdge& h : parts.rotations[far]) {
        if (h == HalfEdge{e, 1}) h = HalfEdge{piece, 1};
      }
    }
    // Segment of edge e toward endpoint 0 is the kept piece (anchored at its
    // end 1); toward endpoint 1 it is the appended piece (anchored at end 0).
    const auto segment = [&](HalfEdge toward) {
      const int j = toward.edge == rec.first.edge ? 0 : 1;
      return toward.end == 0 ? HalfEdge{toward.edge, 1} : HalfEdge{tail_piece[j], 0};
    };
    for (const HalfEdge h : rec.clockwise()) parts.rotations[dummy].push_back(segment(h));
  }

  PlanarSkeleton out;
  out.original_vertex_count = n;
  out.original_edge_count = m;
  out.original_mode = d.mode();
  out.piece_to_edge = std::move(piece_to_edge);
  out.skeleton = std::move(parts).build();
  return out;
}

// Face orbits of a crossing-free drawing with consistent rotations. The face
// following dart h is entered at target(h) by turning clockwise from h's twin,
// so each orbit keeps its face on the left.
inline std::vector<std::vector<HalfEdge>> face_orbits(const CombinatorialDrawing& d) {
  std::vector<std::vector<HalfEdge>> faces;
  std::vector<char> used(2 * d.edge_count(), 0);
  for (std::size_t dart = 0; dart < used.size(); ++dart) {
    if (used[dart]) continue;
    std::vector<HalfEdge> walk;
    HalfEdge h = HalfEdge::from_dart(dart);
    while (!used[h.dart()]) {
      used[h.dart()] = 1;
      walk.push_back(h);
      h = d.next_clockwise(h.opposite());
    }
    faces.push_back(std::move(walk));
  }
  return faces;
}

}  // namespace detail

/// Requires consistent rotations and a valid set of crossing records.
inline PlanarSkeleton planarize(const CombinatorialDrawing& d) {
  if (!d.rotations_consistent()) throw PreconditionError("planarize: inconsistent rotations");
  std::vector<int> uses(d.edge_count(), 0);
  for (const auto& rec : d.crossings()) {
    if (rec.first.edge == rec.second.edge) throw PreconditionError("planarize: self-crossing");
    if (++uses[rec.first.edge] > 1 || ++uses[rec.second.edge] > 1) {
      throw PreconditionError("planarize: edge crossed twice");
    }
  }
  return detail::planarize_unchecked(d);
}

/// Inverse of planarize: merges pieces back and reads the crossing records off
/// the dummy rotations.
inline CombinatorialDrawing unplanarize(const PlanarSkeleton& s) {
  const std::size_t n = s.original_vertex_count;
  const std::size_t m = s.original_edge_count;
  const CombinatorialDrawing& k = s.skeleton;

  DrawingParts parts;
  parts.vertex_count = n;
  parts.mode = s.original_mode;
  parts.edges.resize(m);
  parts.rotations.resize(n);

  for (std::size_t p = 0; p < k.edge_count(); ++p) {
    const EdgeId e = s.piece_to_edge[p];
    for (std::uint8_t end = 0; end < 2; ++end) {
      const VertexId v = k.edge(static_cast<EdgeId>(p)).ends[end];
      if (!s.is_dummy(v)) parts.edges[e].ends[end] = v;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (const HalfEdge piece : k.rotation(v)) parts.rotations[v].push_back(s.to_original(piece));
  }
  for (VertexId v = static_cast<VertexId>(n); v < k.vertex_count(); ++v) {
    const auto& rot = k.rotation(v);
    if (rot.size() != 4) throw StructuralError("dummy vertex without four segments");
    parts.crossings.push_back({s.to_original(rot[0]), s.to_original(rot[1])});
  }
  return std::move(parts).build();
}

}  // namespace onep
