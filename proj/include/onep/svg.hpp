#pragma once

// Straight-line rendering of a drawing through its planarization.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/regions.hpp"
#include "onep/skeleton.hpp"
#include "onep/validate.hpp"

namespace onep {

class LayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point2 {
  double x = 0;
  double y = 0;
};

struct LayoutOptions {
  double tolerance = 1e-9;          ///< stop when no vertex moves farther than this
  std::size_t max_sweeps = 2'000'000;
  double check_tolerance = 1e-6;    ///< geometric self-check
};

struct Layout {
  std::vector<Point2> positions;  ///< per skeleton vertex; dummies after originals
  std::size_t sweeps = 0;
  std::size_t outer_region = 0;
};

struct RenderResult {
  std::string svg;
  Layout layout;
  std::size_t crossings_drawn = 0;   ///< crossings that passed the transversal check
  std::vector<std::string> warnings;  ///< empty iff the self-check passed

  [[nodiscard]] bool self_check_passed() const noexcept { return warnings.empty(); }
};

namespace detail {

// Default outer region: largest degree, then most vertex corners, then
// canonical order.
inline std::size_t default_outer_region(const std::vector<Region>& regions) {
  std::size_t best = 0;
  const auto vertex_corners = [](const Region& r) {
    return std::count_if(r.corners.begin(), r.corners.end(), [](const Corner& c) { return c.is_vertex(); });
  };
  for (std::size_t i = 1; i < regions.size(); ++i) {
    const auto& a = regions[i];
    const auto& b = regions[best];
    if (a.degree() > b.degree() || (a.degree() == b.degree() && vertex_corners(a) > vertex_corners(b))) {
      best = i;
    }
  }
  return best;
}

inline double orient(Point2 a, Point2 b, Point2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double s = len2 == 0 ? 0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(p.x - (a.x + s * dx), p.y - (a.y + s * dy));
}

inline double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) return 0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

}  // namespace detail

/// Barycentric layout of the planarization: the outer region's corners sit on a
/// regular polygon, every other vertex at the average of its neighbours.
inline Layout barycentric_layout(const CombinatorialDrawing& d, std::optional<std::size_t> outer_region = {},
                                 const LayoutOptions& options = {}) {
  require_valid(d, "barycentric_layout");
  const PlanarSkeleton s = planarize(d);
  const auto regions = enumerate_regions(d);
  Layout layout;
  layout.outer_region = outer_region.value_or(detail::default_outer_region(regions));
  if (layout.outer_region >= regions.size()) {
    throw std::invalid_argument("outer region " + std::to_string(layout.outer_region) + " does not exist; drawing has " +
                                std::to_string(regions.size()) + " regions");
  }
  const std::size_t count = s.skeleton.vertex_count();
  const auto skeleton_id = [&](const Corner& c) {
    return c.is_vertex() ? c.id : static_cast<VertexId>(s.original_vertex_count + c.id);
  };

  std::vector<VertexId> boundary;
  for (const Corner& c : regions[layout.outer_region].corners) {
    const VertexId v = skeleton_id(c);
    if (std::find(boundary.begin(), boundary.end(), v) == boundary.end()) boundary.push_back(v);
  }
  layout.positions.assign(count, Point2{});
  std::vector<char> fixed(count, 0);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    // Clockwise placement keeps the outer region on the outside.
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(i) /
                                                    static_cast<double>(boundary.size());
    layout.positions[boundary[i]] = {std::cos(angle), std::sin(angle)};
    fixed[boundary[i]] = 1;
  }

  std::vector<std::vector<VertexId>> neighbours(count);
  for (const Edge& e : s.skeleton.edges()) {
    if (e.is_loop()) continue;
    neighbours[e.ends[0]].push_back(e.ends[1]);
    neighbours[e.ends[1]].push_back(e.ends[0]);
  }
  for (;;) {
    if (layout.sweeps >= options.max_sweeps) {
      throw LayoutError("layout did not converge within " + std::to_string(options.max_sweeps) + " sweeps");
    }
    ++layout.sweeps;
    double moved = 0;
    for (std::size_t v = 0; v < count; ++v) {
      if (fixed[v] || neighbours[v].empty()) continue;
      Point2 sum;
      for (const VertexId w : neighbours[v]) {
        sum.x += layout.positions[w].x;
        sum.y += layout.positions[w].y;
      }
      const double k = static_cast<double>(neighbours[v].size());
      const Point2 next{sum.x / k, sum.y / k};
      moved = std::max(moved, std::hypot(next.x - layout.positions[v].x, next.y - layout.positions[v].y));
      layout.positions[v] = next;
    }
    if (moved <= options.tolerance) break;
  }
  return layout;
}

/// Renders d as SVG 1.1. The geometric self-check runs on the result; any
/// failure is recorded in `warnings` and annotated inside the file.
inline RenderResult render_svg(const CombinatorialDrawing& d, std::optional<std::size_t> outer_region = {},
                               const LayoutOptions& options = {}) {
  RenderResult result;
  result.layout = barycentric_layout(d, outer_region, options);
  const PlanarSkeleton s = planarize(d);
  const auto& pos = result.layout.positions;
  const double tol = options.check_tolerance;
  const auto& pieces = s.skeleton.edges();

  // Distinct vertex positions.
  for (std::size_t u = 0; u < pos.size(); ++u) {
    for (std::size_t v = u + 1; v < pos.size(); ++v) {
      if (std::hypot(pos[u].x - pos[v].x, pos[u].y - pos[v].y) <= tol) {
        result.warnings.push_back("vertices " + std::to_string(u) + " and " + std::to_string(v) + " coincide");
      }
    }
  }
  // No two segments meet except at a shared endpoint.
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Edge& a = pieces[i];
      const Edge& b = pieces[j];
      const Point2 a0 = pos[a.ends[0]], a1 = pos[a.ends[1]], b0 = pos[b.ends[0]], b1 = pos[b.ends[1]];
      const bool share = b.touches(a.ends[0]) || b.touches(a.ends[1]);
      double gap = 0;
      if (!share) {
        gap = detail::segment_distance(a0, a1, b0, b1);
      } else {
        // Overlap check: each far endpoint must stay off the other segment.
        gap = std::numeric_limits<double>::infinity();
        for (const VertexId p : a.ends) {
          if (!b.touches(p)) gap = std::min(gap, detail::point_segment_distance(pos[p], b0, b1));
        }
        for (const VertexId p : b.ends) {
          if (!a.touches(p)) gap = std::min(gap, detail::point_segment_distance(pos[p], a0, a1));
        }
        if (a.ends == b.ends || (a.ends[0] == b.ends[1] && a.ends[1] == b.ends[0])) gap = 0;
      }
      if (gap <= tol) {
        result.warnings.push_back("segments of edges " + std::to_string(s.piece_to_edge[i]) + " and " +
                                  std::to_string(s.piece_to_edge[j]) + " intersect away from a recorded crossing");
      }
    }
  }
  // Each crossing is transversal: around the dummy the two edges alternate.
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto dummy = static_cast<VertexId>(s.original_vertex_count + c);
    const auto& rot = s.skeleton.rotation(dummy);
    struct Arm {
      double angle;
      EdgeId edge;
    };
    std::vector<Arm> arms;
    for (const HalfEdge h : rot) {
      const Point2 far = pos[s.skeleton.target(h)];
      arms.push_back({std::atan2(far.y - pos[dummy].y, far.x - pos[dummy].x), s.piece_to_edge[h.edge]});
    }
    std::sort(arms.begin(), arms.end(), [](const Arm& l, const Arm& r) { return l.angle < r.angle; });
    bool alternating = arms.size() == 4;
    for (std::size_t i = 0; alternating && i < 4; ++i) {
      if (arms[i].edge == arms[(i + 1) % 4].edge) alternating = false;
      const double gap = std::remainder(arms[(i + 1) % 4].angle - arms[i].angle, 2 * std::numbers::pi);
      if (std::abs(gap) <= tol) alternating = false;
    }
    if (alternating) ++result.crossings_drawn;
    else result.warnings.push_back("crossing " + std::to_string(c) + " is not transversal");
  }

  // Map the unit disc onto the canvas.
  constexpr double size = 640;
  constexpr double margin = 40;
  const auto sx = [&](Point2 p) { return margin + (p.x + 1) / 2 * (size - 2 * margin); };
  const auto sy = [&](Point2 p) { return margin + (1 - p.y) / 2 * (size - 2 * margin); };

  std::ostringstream svg;
  svg << std::fixed << std::setprecision(4);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  svg << "<!-- n=" << d.vertex_count() << " m=" << d.edge_count() << " x=" << d.crossing_count()
      << " outer_region=" << result.layout.outer_region << " sweeps=" << result.layout.sweeps << " -->\n";
  for (const auto& w : result.warnings) svg << "<!-- warning: " << w << " -->\n";
  svg << "<g stroke=\"#333\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    // A crossed edge is the polyline through its crossing point.
    std::vector<VertexId> path{d.edge(static_cast<EdgeId>(e)).ends[0]};
    if (const auto c = d.crossing_of(static_cast<EdgeId>(e))) {
      path.push_back(static_cast<VertexId>(s.original_vertex_count + *c));
    }
    path.push_back(d.edge(static_cast<EdgeId>(e)).ends[1]);
    svg << "  <polyline class=\"edge" << (path.size() == 3 ? " crossed" : "") << "\" data-edge=\"" << e
        << "\" points=\"";
    for (std::size_t i = 0; i < path.size(); ++i) {
      svg << (i ? " " : "") << sx(pos[path[i]]) << ',' << sy(pos[path[i]]);
    }
    svg << "\"/>\n";
  }
  svg << "</g>\n<g fill=\"#c00\">\n";
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const Point2 p = pos[s.original_vertex_count + c];
    svg << "  <circle class=\"crossing\" data-crossing=\"" << c << "\" cx=\"" << sx(p) << "\" cy=\"" << sy(p)
        << "\" r=\"3\"/>\n";
  }
  svg << "</g>\n<g fill=\"#fff\" stroke=\"#000\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    svg << "  <circle class=\"vertex\" data-vertex=\"" << v << "\" cx=\"" << sx(pos[v]) << "\" cy=\"" << sy(pos[v])
        << "\" r=\"7\"/>\n";
    svg << "  <text x=\"" << sx(pos[v]) << "\" y=\"" << sy(pos[v]) + 3.5
        << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#000\">" << v << "</text>\n";
  }
  svg << "</g>\n";
  if (!result.warnings.empty()) {
    svg << "<text class=\"warning\" x=\"8\" y=\"16\" fill=\"#c00\" font-family=\"sans-serif\" font-size=\"12\">"
        << "warning: geometric self-check failed (" << result.warnings.size() << " issues)</text>\n";
  }
  svg << "</svg>\n";
  result.svg = svg.str();
  return result;
}

}  // namespace onep
