#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/graph.hpp"
#include "onep/regions.hpp"
#include "onep/skeleton.hpp"

namespace onep {

enum class ViolationKind {
  too_few_vertices,
  loop_in_simple_mode,
  parallel_in_simple_mode,
  rotation_inconsistent,
  self_crossing,
  adjacent_edges_cross,
  edge_crossed_twice,
  disconnected,
  euler_failure,
  small_region,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::too_few_vertices: return "too_few_vertices";
    case ViolationKind::loop_in_simple_mode: return "loop_in_simple_mode";
    case ViolationKind::parallel_in_simple_mode: return "parallel_in_simple_mode";
    case ViolationKind::rotation_inconsistent: return "rotation_inconsistent";
    case ViolationKind::self_crossing: return "self_crossing";
    case ViolationKind::adjacent_edges_cross: return "adjacent_edges_cross";
    case ViolationKind::edge_crossed_twice: return "edge_crossed_twice";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::euler_failure: return "euler_failure";
    case ViolationKind::small_region: return "small_region";
  }
  return "unknown";
}

/// What a violation is about, so callers can point at a source line.
struct Subject {
  enum class Kind { none, vertex, edge, crossing };
  Kind kind = Kind::none;
  std::uint32_t id = 0;
};

struct Violation {
  ViolationKind kind;
  std::string message;
  Subject subject;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool accepted() const noexcept { return violations.empty(); }
  [[nodiscard]] bool has(ViolationKind k) const {
    for (const auto& v : violations) {
      if (v.kind == k) return true;
    }
    return false;
  }
};

inline ValidationReport validate(const CombinatorialDrawing& d) {
  ValidationReport report;
  const auto add = [&report](ViolationKind k, std::string msg, Subject s = {}) {
    report.violations.push_back({k, std::move(msg), s});
  };
  const auto edge_subject = [](std::size_t e) {
    return Subject{Subject::Kind::edge, static_cast<std::uint32_t>(e)};
  };

  if (d.vertex_count() < 3) {
    add(ViolationKind::too_few_vertices,
        "drawing has " + std::to_string(d.vertex_count()) + " vertices; at least 3 are required");
  }

  if (d.mode() == GraphMode::simple) {
    std::map<std::pair<VertexId, VertexId>, std::size_t> first_edge;
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
      const Edge& ed = d.edges()[e];
      if (ed.is_loop()) {
        add(ViolationKind::loop_in_simple_mode, "edge " + std::to_string(e) + " is a loop",
            edge_subject(e));
        continue;
      }
      const auto key = std::minmax(ed.ends[0], ed.ends[1]);
      const auto [it, fresh] = first_edge.try_emplace({key.first, key.second}, e);
      if (!fresh) {
        add(ViolationKind::parallel_in_simple_mode,
            "edge " + std::to_string(e) + " is parallel to edge " + std::to_string(it->second),
            edge_subject(e));
      }
    }
  }

  // Each half-edge exactly once, in the rotation of the endpoint it names.
  {
    std::vector<int> seen(2 * d.edge_count(), 0);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      for (const HalfEdge h : d.rotation(v)) {
        ++seen[h.dart()];
        if (d.origin(h) != v) {
          std::ostringstream msg;
          msg << "half-edge " << h.edge << "." << int{h.end} << " listed at vertex " << v
              << " but anchored at vertex " << d.origin(h);
          add(ViolationKind::rotation_inconsistent, msg.str(),
              Subject{Subject::Kind::vertex, v});
        }
      }
    }
    for (std::size_t dart = 0; dart < seen.size(); ++dart) {
      if (seen[dart] == 1) continue;
      const HalfEdge h = HalfEdge::from_dart(dart);
      std::ostringstream msg;
      msg << "half-edge " << h.edge << "." << int{h.end} << " appears " << seen[dart]
          << " times across all rotations";
      add(ViolationKind::rotation_inconsistent, msg.str(), edge_subject(h.edge));
    }
  }

  bool crossings_ok = true;
  {
    std::vector<int> uses(d.edge_count(), 0);
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      const CrossingRecord& rec = d.crossings()[c];
      const Subject subject{Subject::Kind::crossing, static_cast<std::uint32_t>(c)};
      const EdgeId e = rec.first.edge;
      const EdgeId f = rec.second.edge;
      if (e == f) {
        crossings_ok = false;
        add(ViolationKind::self_crossing, "edge " + std::to_string(e) + " crosses itself", subject);
        ++uses[e];
        continue;
      }
      const Edge& a = d.edge(e);
      const Edge& b = d.edge(f);
      if (b.touches(a.ends[0]) || b.touches(a.ends[1])) {
        crossings_ok = false;
        add(ViolationKind::adjacent_edges_cross,
            "adjacent edges " + std::to_string(e) + " and " + std::to_string(f) + " cross",
            subject);
      }
      ++uses[e];
      ++uses[f];
    }
    for (std::size_t e = 0; e < uses.size(); ++e) {
      if (uses[e] > 1) {
        crossings_ok = false;
        add(ViolationKind::edge_crossed_twice,
            "edge " + std::to_string(e) + " is crossed " + std::to_string(uses[e]) + " times",
            edge_subject(e));
      }
    }
  }

  // Connectivity counts every edge, loops and parallels included.
  {
    UndirectedSimpleGraph g(d.vertex_count());
    for (const Edge& e : d.edges()) g.add_edge(e.ends[0], e.ends[1]);
    if (!g.connected()) add(ViolationKind::disconnected, "underlying graph is disconnected");
  }

  if (d.rotations_consistent() && crossings_ok && d.vertex_count() > 0 &&
      !report.has(ViolationKind::disconnected)) {
    const PlanarSkeleton s = detail::planarize_unchecked(d);
    const auto orbits = detail::face_orbits(s.skeleton);
    const auto v = static_cast<long long>(s.skeleton.vertex_count());
    const auto e = static_cast<long long>(s.skeleton.edge_count());
    const auto f = static_cast<long long>(orbits.size());
    if (v - e + f != 2) {
      std::ostringstream msg;
      msg << "planarization has V - E + F = " << v << " - " << e << " + " << f << " = "
          << (v - e + f) << ", expected 2 for a sphere embedding";
      add(ViolationKind::euler_failure, msg.str());
    } else {
      for (const auto& orbit : orbits) {
        if (orbit.size() < 3) {
          const Region r = detail::region_from_orbit(s, orbit);
          std::ostringstream msg;
          msg << "region of degree " << r.degree() << " at corners";
          for (const Corner& c : r.corners) msg << ' ' << c;
          add(ViolationKind::small_region, msg.str());
        }
      }
    }
  }
  return report;
}

/// Throws PreconditionError naming the first violation unless d is accepted.
inline void require_valid(const CombinatorialDrawing& d, const char* operation) {
  const auto report = validate(d);
  if (!report.accepted()) {
    throw PreconditionError(std::string(operation) + ": drawing rejected (" +
                            to_string(report.violations.front().kind) + ": " +
                            report.violations.front().message + ")");
  }
}

}  // namespace onep
