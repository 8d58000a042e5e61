#pragma once

// Fixture library and generators: convex polyhedra, stacked triangulations,
// crossing insertions, the 24-vertex minimum-degree-7 drawing, and
// hub-glued families.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/graph.hpp"
#include "onep/regions.hpp"
#include "onep/validate.hpp"

namespace onep {

using Point3 = std::array<double, 3>;

/// Edge skeleton of a convex polyhedron centred at the origin: vertices are
/// joined when their squared distance is `edge_length_sq` (relative tolerance
/// 1e-9). Rotations follow the clockwise order seen from outside.
inline CombinatorialDrawing polyhedron_drawing(const std::vector<Point3>& points, double edge_length_sq) {
  const std::size_t n = points.size();
  const auto sub = [](const Point3& a, const Point3& b) {
    return Point3{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  const auto dot = [](const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  const auto cross = [](const Point3& a, const Point3& b) {
    return Point3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };

  DrawingParts parts;
  parts.vertex_count = n;
  parts.rotations.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const Point3 d = sub(points[u], points[v]);
      if (std::abs(dot(d, d) - edge_length_sq) <= 1e-9 * edge_length_sq) {
        parts.edges.push_back(Edge{{static_cast<VertexId>(u), static_cast<VertexId>(v)}});
      }
    }
  }
  std::vector<std::vector<std::pair<double, HalfEdge>>> around(n);
  for (std::size_t e = 0; e < parts.edges.size(); ++e) {
    for (std::uint8_t end = 0; end < 2; ++end) {
      const VertexId v = parts.edges[e].ends[end];
      const VertexId w = parts.edges[e].ends[end ^ 1U];
      const Point3& normal = points[v];
      // Tangent frame (a, b) with a × b along the outward normal.
      const Point3 seed = std::abs(normal[0]) < 0.9 ? Point3{1, 0, 0} : Point3{0, 1, 0};
      const Point3 a = cross(seed, normal);
      const Point3 b = cross(normal, a);
      const Point3 dir = sub(points[w], points[v]);
      const double angle = std::atan2(dot(dir, b), dot(dir, a));
      around[v].push_back({angle, HalfEdge{static_cast<EdgeId>(e), end}});
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    // Decreasing angle is clockwise when looking down the normal.
    std::sort(around[v].begin(), around[v].end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    for (const auto& [angle, h] : around[v]) parts.rotations[v].push_back(h);
  }
  return std::move(parts).build();
}

/// The cycle on vertices 0..n-1 drawn as a simple closed curve.
inline CombinatorialDrawing cycle_drawing(std::size_t n) {
  DrawingParts parts;
  parts.vertex_count = n;
  parts.rotations.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<EdgeId>(i);
    parts.edges.push_back(Edge{{static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)}});
    parts.rotations[i].push_back({e, 0});
    parts.rotations[(i + 1) % n].push_back({e, 1});
  }
  return std::move(parts).build();
}

/// Places a new vertex inside an uncrossed region and joins it to every corner.
inline CombinatorialDrawing insert_vertex_in_region(const CombinatorialDrawing& d, const Region& region) {
  if (!region.uncrossed()) throw PreconditionError("insert_vertex_in_region: region has crossing corners");
  DrawingParts parts = DrawingParts::of(d);
  const auto w = static_cast<VertexId>(parts.vertex_count++);
  parts.rotations.emplace_back();
  const std::size_t k = region.degree();
  std::vector<EdgeId> spokes;
  for (const Corner& c : region.corners) {
    const auto e = static_cast<EdgeId>(parts.edges.size());
    parts.edges.push_back(Edge{{c.id, w}});
    parts.insert_before(c.id, c.leaving, HalfEdge{e, 0});
    spokes.push_back(e);
  }
  // The walk runs counterclockwise around the region, so the spokes appear in
  // reverse walk order clockwise around the new vertex.
  for (std::size_t i = 0; i < k; ++i) parts.rotations[w].push_back({spokes[k - 1 - i], 1});
  if (parts.has_parallel_or_loop()) parts.mode = GraphMode::multigraph;
  return std::move(parts).build();
}

/// Draws both diagonals of an uncrossed quadrilateral region, crossing once.
inline CombinatorialDrawing add_crossing_pair_in_quad(const CombinatorialDrawing& d, const Region& region) {
  if (region.degree() != 4 || !region.uncrossed()) {
    throw PreconditionError("add_crossing_pair_in_quad: region is not an uncrossed quadrilateral");
  }
  const auto& c = region.corners;
  DrawingParts parts = DrawingParts::of(d);
  const auto p = static_cast<EdgeId>(parts.edges.size());
  const auto q = static_cast<EdgeId>(p + 1);
  parts.edges.push_back(Edge{{c[0].id, c[2].id}});
  parts.edges.push_back(Edge{{c[1].id, c[3].id}});
  parts.insert_before(c[0].id, c[0].leaving, {p, 0});
  parts.insert_before(c[2].id, c[2].leaving, {p, 1});
  parts.insert_before(c[1].id, c[1].leaving, {q, 0});
  parts.insert_before(c[3].id, c[3].leaving, {q, 1});
  // Clockwise around the centre the corners read c0, c3, c2, c1.
  parts.crossings.push_back({HalfEdge{p, 0}, HalfEdge{q, 1}});
  if (parts.has_parallel_or_loop()) parts.mode = GraphMode::multigraph;
  return std::move(parts).build();
}

/// Draws an edge between the apexes of the two uncrossed triangles on either
/// side of uncrossed edge e, crossing e.
inline CombinatorialDrawing add_crossing_across_edge(const CombinatorialDrawing& d, EdgeId e) {
  if (d.is_crossed(e)) throw PreconditionError("add_crossing_across_edge: edge already crossed");
  const auto regions = enumerate_regions(d);
  const Region* left = nullptr;   // walk a -> b along e
  const Region* right = nullptr;  // walk b -> a along e
  std::size_t left_at = 0;
  std::size_t right_at = 0;
  for (const Region& r : regions) {
    for (std::size_t i = 0; i < r.degree(); ++i) {
      if (!r.corners[i].is_vertex()) continue;
      if (r.corners[i].leaving == HalfEdge{e, 0}) {
        left = &r;
        left_at = i;
      } else if (r.corners[i].leaving == HalfEdge{e, 1}) {
        right = &r;
        right_at = i;
      }
    }
  }
  if (left == nullptr || right == nullptr || left == right || !left->is_uncrossed_triangle() ||
      !right->is_uncrossed_triangle()) {
    throw PreconditionError("add_crossing_across_edge: edge is not flanked by two uncrossed triangles");
  }
  const Corner& apex_left = left->corners[(left_at + 2) % 3];
  const Corner& apex_right = right->corners[(right_at + 2) % 3];
  if (apex_left.id == apex_right.id) {
    throw PreconditionError("add_crossing_across_edge: both triangles share their apex");
  }
  DrawingParts parts = DrawingParts::of(d);
  const auto f = static_cast<EdgeId>(parts.edges.size());
  parts.edges.push_back(Edge{{apex_left.id, apex_right.id}});
  parts.insert_before(apex_left.id, apex_left.leaving, {f, 0});
  parts.insert_before(apex_right.id, apex_right.leaving, {f, 1});
  // The left apex lies on the left of a -> b: clockwise a, left, b, right.
  parts.crossings.push_back({HalfEdge{e, 0}, HalfEdge{f, 0}});
  if (parts.has_parallel_or_loop()) parts.mode = GraphMode::multigraph;
  return std::move(parts).build();
}

/// Deletes an uncrossed edge; remaining edges are renumbered densely.
inline CombinatorialDrawing remove_uncrossed_edge(const CombinatorialDrawing& d, EdgeId e) {
  if (d.is_crossed(e)) throw PreconditionError("remove_uncrossed_edge: edge is crossed");
  const auto renumber = [e](EdgeId id) { return id > e ? id - 1 : id; };
  DrawingParts parts;
  parts.vertex_count = d.vertex_count();
  parts.mode = d.mode();
  for (std::size_t i = 0; i < d.edge_count(); ++i) {
    if (i != e) parts.edges.push_back(d.edges()[i]);
  }
  parts.rotations.resize(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    for (const HalfEdge h : d.rotation(v)) {
      if (h.edge != e) parts.rotations[v].push_back({renumber(h.edge), h.end});
    }
  }
  for (const CrossingRecord& rec : d.crossings()) {
    parts.crossings.push_back({{renumber(rec.first.edge), rec.first.end},
                               {renumber(rec.second.edge), rec.second.end}});
  }
  return std::move(parts).build();
}

inline CombinatorialDrawing triangle_drawing() { return cycle_drawing(3); }

/// Start from a triangle and repeatedly stack a vertex into a triangular
/// region, joined to its three corners. Region choice is deterministic.
inline CombinatorialDrawing stacked_triangulation(std::size_t depth) {
  CombinatorialDrawing d = triangle_drawing();
  for (std::size_t i = 0; i < depth; ++i) {
    const auto regions = detail::regions_unchecked(d);
    d = insert_vertex_in_region(d, regions[(7 * i + 3) % regions.size()]);
  }
  return d;
}

/// Stacked triangulation with regions picked by `rng`.
template <class Rng>
CombinatorialDrawing random_stacked_triangulation(std::size_t depth, Rng& rng) {
  CombinatorialDrawing d = triangle_drawing();
  for (std::size_t i = 0; i < depth; ++i) {
    const auto regions = detail::regions_unchecked(d);
    std::uniform_int_distribution<std::size_t> pick(0, regions.size() - 1);
    d = insert_vertex_in_region(d, regions[pick(rng)]);
  }
  return d;
}

/// Random good drawing: a stacked triangulation, then crossing edges added
/// across random edges, then random uncrossed edges removed while the drawing
/// stays valid. Usually not triangulated.
inline CombinatorialDrawing random_drawing_variant(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t depth = std::uniform_int_distribution<std::size_t>(1, 22)(rng);
  CombinatorialDrawing d = random_stacked_triangulation(depth, rng);

  const std::size_t crossing_attempts = std::uniform_int_distribution<std::size_t>(0, d.vertex_count())(rng);
  for (std::size_t i = 0; i < crossing_attempts; ++i) {
    const auto e = static_cast<EdgeId>(std::uniform_int_distribution<std::size_t>(0, d.edge_count() - 1)(rng));
    try {
      d = add_crossing_across_edge(d, e);
    } catch (const PreconditionError&) {
      // not flanked by two uncrossed triangles; try another edge
    }
  }

  const std::size_t removals = std::uniform_int_distribution<std::size_t>(0, d.edge_count() / 3)(rng);
  for (std::size_t i = 0; i < removals; ++i) {
    const auto e = static_cast<EdgeId>(std::uniform_int_distribution<std::size_t>(0, d.edge_count() - 1)(rng));
    if (d.is_crossed(e)) continue;
    CombinatorialDrawing candidate = remove_uncrossed_edge(d, e);
    if (validate(candidate).accepted()) d = std::move(candidate);
  }
  return d;
}

inline std::vector<Point3> octahedron_points() {
  return {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

/// All coordinate permutations of (±1, ±1, ±(1 + √2)).
inline std::vector<Point3> rhombicuboctahedron_points() {
  const double big = 1.0 + std::sqrt(2.0);
  std::vector<Point3> pts;
  for (int axis = 0; axis < 3; ++axis) {
    for (int signs = 0; signs < 8; ++signs) {
      Point3 p{};
      int bit = 0;
      for (int k = 0; k < 3; ++k) {
        const double s = (signs >> bit++) & 1 ? -1.0 : 1.0;
        p[k] = s * (k == axis ? big : 1.0);
      }
      pts.push_back(p);
    }
  }
  return pts;
}

inline EdgeId find_edge(const CombinatorialDrawing& d, VertexId u, VertexId v) {
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edges()[e];
    if ((ed.ends[0] == u && ed.ends[1] == v) || (ed.ends[0] == v && ed.ends[1] == u)) {
      return static_cast<EdgeId>(e);
    }
  }
  throw std::out_of_range("no edge between " + std::to_string(u) + " and " + std::to_string(v));
}

/// 24-vertex 7-regular 1-planar drawing: the rhombicuboctahedron with both
/// diagonals drawn in each of its 18 square faces. Its 8 triangles are the
/// uncrossed regions.
inline CombinatorialDrawing min_degree7_drawing() {
  CombinatorialDrawing d = polyhedron_drawing(rhombicuboctahedron_points(), 4.0);
  for (;;) {
    const auto regions = detail::regions_unchecked(d);
    const auto quad = std::find_if(regions.begin(), regions.end(),
                                   [](const Region& r) { return r.degree() == 4 && r.uncrossed(); });
    if (quad == regions.end()) break;
    d = add_crossing_pair_in_quad(d, *quad);
  }
  return d;
}

/// K6 as the octahedron plus its three antipodal diagonals, each crossing one
/// edge.
inline CombinatorialDrawing k6_drawing() {
  CombinatorialDrawing d = polyhedron_drawing(octahedron_points(), 2.0);
  // Equator 0..3, poles 4 (top) and 5 (bottom).
  d = add_crossing_across_edge(d, find_edge(d, 0, 1));  // poles
  d = add_crossing_across_edge(d, find_edge(d, 4, 3));  // 0 - 2
  d = add_crossing_across_edge(d, find_edge(d, 5, 2));  // 1 - 3
  return d;
}

/// Square with both diagonals drawn inside it.
inline CombinatorialDrawing k4_crossed_drawing() {
  const CombinatorialDrawing c4 = cycle_drawing(4);
  return add_crossing_pair_in_quad(c4, detail::regions_unchecked(c4).front());
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"fig1", "k4_planar", "k4_crossed", "k6", "c4",
                                                 "octahedron"};
  return names;
}

/// Named fixture. Also accepts "stacked(DEPTH)".
inline CombinatorialDrawing fixture(const std::string& name) {
  if (name == "fig1") return min_degree7_drawing();
  if (name == "k4_planar") return stacked_triangulation(1);
  if (name == "k4_crossed") return k4_crossed_drawing();
  if (name == "k6") return k6_drawing();
  if (name == "c4") return cycle_drawing(4);
  if (name == "octahedron") return polyhedron_drawing(octahedron_points(), 2.0);
  if (name.rfind("stacked(", 0) == 0 && name.size() > 9 && name.back() == ')') {
    const std::string digits = name.substr(8, name.size() - 9);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return stacked_triangulation(std::stoul(digits));
    }
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

struct GlueSpec {
  CombinatorialDrawing base;
  VertexId hub = 0;
  std::size_t copies = 1;
};

/// k copies of the base identified at the hub. Each copy keeps its own
/// angular sector around the hub, so no new crossings appear. The hub becomes
/// vertex 0; copy i takes the next |V(base)| − 1 ids in base order.
inline CombinatorialDrawing glue_copies(const GlueSpec& spec) {
  const CombinatorialDrawing& base = spec.base;
  if (spec.copies < 1) throw std::invalid_argument("glue_copies: need at least one copy");
  if (spec.hub >= base.vertex_count()) throw std::invalid_argument("glue_copies: hub not in base");
  require_valid(base, "glue_copies");
  if (base.mode() != GraphMode::simple) throw std::invalid_argument("glue_copies: base must be simple");

  const std::size_t nb = base.vertex_count();
  const std::size_t mb = base.edge_count();
  const auto map_vertex = [&](std::size_t copy, VertexId v) -> VertexId {
    if (v == spec.hub) return 0;
    return static_cast<VertexId>(1 + copy * (nb - 1) + (v < spec.hub ? v : v - 1));
  };
  const auto map_half = [&](std::size_t copy, HalfEdge h) {
    return HalfEdge{static_cast<EdgeId>(copy * mb + h.edge), h.end};
  };

  DrawingParts parts;
  parts.vertex_count = spec.copies * (nb - 1) + 1;
  parts.mode = base.mode();
  parts.rotations.resize(parts.vertex_count);
  for (std::size_t copy = 0; copy < spec.copies; ++copy) {
    for (const Edge& e : base.edges()) {
      parts.edges.push_back(Edge{{map_vertex(copy, e.ends[0]), map_vertex(copy, e.ends[1])}});
    }
    for (VertexId v = 0; v < nb; ++v) {
      auto& rot = parts.rotations[map_vertex(copy, v)];
      for (const HalfEdge h : base.rotation(v)) rot.push_back(map_half(copy, h));
    }
    for (const CrossingRecord& rec : base.crossings()) {
      parts.crossings.push_back({map_half(copy, rec.first), map_half(copy, rec.second)});
    }
  }
  return std::move(parts).build();
}

}  // namespace onep
