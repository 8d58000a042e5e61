#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/regions.hpp"
#include "onep/validate.hpp"

namespace onep {

/// Default choice: drop the crossing edge with the smaller id.
struct SmallerEdgeId {
  EdgeId operator()(const CombinatorialDrawing&, const CrossingRecord& rec) const {
    return std::min(rec.first.edge, rec.second.edge);
  }
};

/// Deletes one edge of every crossing pair from a triangulated drawing. The
/// result is crossing-free and triangulated; surviving edges keep their
/// relative order and are renumbered densely.
template <class Selector = SmallerEdgeId>
CombinatorialDrawing remove_one_edge_per_crossing(const CombinatorialDrawing& d,
                                                  Selector selector = {}) {
  require_valid(d, "remove_one_edge_per_crossing");
  const auto regions = detail::regions_unchecked(d);
  if (!std::all_of(regions.begin(), regions.end(), [](const Region& r) { return r.degree() == 3; })) {
    throw PreconditionError("remove_one_edge_per_crossing: drawing is not triangulated");
  }

  std::vector<char> removed(d.edge_count(), 0);
  for (const CrossingRecord& rec : d.crossings()) {
    const EdgeId pick = selector(d, rec);
    if (pick != rec.first.edge && pick != rec.second.edge) {
      throw PreconditionError("remove_one_edge_per_crossing: selector chose an edge outside the crossing");
    }
    removed[pick] = 1;
  }

  constexpr EdgeId gone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> renumber(d.edge_count(), gone);
  DrawingParts parts;
  parts.vertex_count = d.vertex_count();
  parts.mode = d.mode();
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    if (removed[e]) continue;
    renumber[e] = static_cast<EdgeId>(parts.edges.size());
    parts.edges.push_back(d.edges()[e]);
  }
  parts.rotations.resize(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    for (const HalfEdge h : d.rotation(v)) {
      if (renumber[h.edge] != gone) parts.rotations[v].push_back({renumber[h.edge], h.end});
    }
  }
  return std::move(parts).build();
}

}  // namespace onep
