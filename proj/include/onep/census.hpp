#pragma once

// Counting invariants of a drawing and the degree-7 lower-bound certificate.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/regions.hpp"
#include "onep/triangulator.hpp"
#include "onep/validate.hpp"

namespace onep {

/// Raised when a certified inequality fails; either a bug or a drawing that
/// slipped past validation.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Census {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t x = 0;
  /// Degree-3 regions whose corners are all vertices.
  std::size_t t = 0;
  std::size_t n7 = 0;
  std::size_t min_degree = 0;
  std::size_t region_count = 0;
  bool triangulated = false;
  std::map<std::size_t, std::size_t> degree_histogram;
};

inline Census census(const CombinatorialDrawing& d) {
  require_valid(d, "census");
  Census c;
  c.n = d.vertex_count();
  c.m = d.edge_count();
  c.x = d.crossing_count();
  c.min_degree = d.min_degree();
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    const std::size_t deg = d.degree(v);
    ++c.degree_histogram[deg];
    if (deg == 7) ++c.n7;
  }
  const auto regions = detail::regions_unchecked(d);
  c.region_count = regions.size();
  c.triangulated = true;
  for (const Region& r : regions) {
    if (r.is_uncrossed_triangle()) ++c.t;
    if (r.degree() != 3) c.triangulated = false;
  }
  return c;
}

enum class Relation { equal, at_least, at_most };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "=";
    case Relation::at_least: return ">=";
    case Relation::at_most: return "<=";
  }
  return "?";
}

struct IdentityCheck {
  std::string name;
  std::string formula;
  bool applicable = false;
  /// Failed precondition when not applicable.
  std::string precondition;
  long long left = 0;
  long long right = 0;
  Relation relation = Relation::equal;
  bool holds = false;
};

struct IdentityReport {
  Census census;
  std::vector<IdentityCheck> checks;

  [[nodiscard]] bool all_applicable_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return !c.applicable || c.holds; });
  }
  [[nodiscard]] const IdentityCheck& at(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return c;
    }
    throw std::out_of_range("no identity named " + name);
  }
};

/// Identity names, in report order.
inline constexpr std::array<const char*, 5> kIdentityNames = {
    "degree_sum", "edges_vs_crossings", "regions_vs_crossings", "degree7_vs_uncrossed",
    "edge_bound"};

inline IdentityReport check_identities(const CombinatorialDrawing& d) {
  IdentityReport report;
  report.census = census(d);
  const Census& c = report.census;
  const auto n = static_cast<long long>(c.n);
  const auto m = static_cast<long long>(c.m);
  const auto x = static_cast<long long>(c.x);
  const auto t = static_cast<long long>(c.t);
  const auto n7 = static_cast<long long>(c.n7);

  const bool tri = c.triangulated;
  const bool deg7 = c.min_degree >= 7;
  const std::string not_tri = "not triangulated";
  const std::string low_deg = "min degree " + std::to_string(c.min_degree) + " < 7";

  const auto make = [](std::string name, std::string formula, std::string failed, long long l,
                       Relation rel, long long r) {
    IdentityCheck check;
    check.name = std::move(name);
    check.formula = std::move(formula);
    check.applicable = failed.empty();
    check.precondition = std::move(failed);
    check.left = l;
    check.right = r;
    check.relation = rel;
    switch (rel) {
      case Relation::equal: check.holds = l == r; break;
      case Relation::at_least: check.holds = l >= r; break;
      case Relation::at_most: check.holds = l <= r; break;
    }
    return check;
  };

  const std::string deg_pre = !tri ? not_tri : (!deg7 ? low_deg : std::string{});
  report.checks.push_back(make(kIdentityNames[0], "2m >= 8n - n7", deg_pre, 2 * m,
                               Relation::at_least, 8 * n - n7));
  report.checks.push_back(make(kIdentityNames[1], "m = 3n - 6 + x", tri ? "" : not_tri, m,
                               Relation::equal, 3 * n - 6 + x));
  report.checks.push_back(make(kIdentityNames[2], "2n - 4 = 2x + t", tri ? "" : not_tri,
                               2 * n - 4, Relation::equal, 2 * x + t));
  report.checks.push_back(make(kIdentityNames[3], "n7 <= 3t", deg_pre, n7, Relation::at_most, 3 * t));
  report.checks.push_back(make(kIdentityNames[4], "2m <= 8n - 16 - t", tri ? "" : not_tri, 2 * m,
                               Relation::at_most, 8 * n - 16 - t));
  return report;
}

/// A degree-7 vertex together with two consecutive uncrossed edge-ends and the
/// uncrossed triangle lying between them.
struct Degree7Witness {
  VertexId vertex = 0;
  HalfEdge first;
  HalfEdge second;
  std::size_t region = 0;  ///< index into enumerate_regions(d)
};

struct WitnessReport {
  std::vector<Degree7Witness> witnesses;
  std::vector<VertexId> missing;      ///< degree-7 vertices without a witness
  std::vector<std::size_t> charges;   ///< per region, number of witnesses landing there
  std::size_t charged_regions = 0;

  [[nodiscard]] std::size_t max_charge() const {
    return charges.empty() ? 0 : *std::max_element(charges.begin(), charges.end());
  }
  [[nodiscard]] bool holds() const { return missing.empty() && max_charge() <= 3; }
};

/// Checks that every degree-7 vertex of a triangulated drawing sits on an
/// uncrossed triangle, and charges each such vertex to one of them.
inline WitnessReport degree7_witnesses(const CombinatorialDrawing& d) {
  require_valid(d, "degree7_witnesses");
  const auto regions = detail::regions_unchecked(d);
  if (!std::all_of(regions.begin(), regions.end(), [](const Region& r) { return r.degree() == 3; })) {
    throw PreconditionError("degree7_witnesses: drawing is not triangulated");
  }
  // The wedge clockwise after h at its origin belongs to the region whose
  // walk leaves that vertex along next_clockwise(h).
  std::map<HalfEdge, std::size_t> region_leaving;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    for (const Corner& c : regions[i].corners) {
      if (c.is_vertex()) region_leaving[c.leaving] = i;
    }
  }

  WitnessReport report;
  report.charges.assign(regions.size(), 0);
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (d.degree(v) != 7) continue;
    const auto& rot = d.rotation(v);
    std::optional<Degree7Witness> found;
    for (std::size_t i = 0; i < rot.size() && !found; ++i) {
      const HalfEdge a = rot[i];
      const HalfEdge b = rot[(i + 1) % rot.size()];
      if (d.is_crossed(a.edge) || d.is_crossed(b.edge)) continue;
      const std::size_t r = region_leaving.at(b);
      if (!regions[r].is_uncrossed_triangle()) {
        throw IntegrityError("wedge between two uncrossed edges is not an uncrossed triangle");
      }
      found = Degree7Witness{v, a, b, r};
    }
    if (!found) {
      report.missing.push_back(v);
      continue;
    }
    ++report.charges[found->region];
    report.witnesses.push_back(*found);
  }
  report.charged_regions = static_cast<std::size_t>(
      std::count_if(report.charges.begin(), report.charges.end(), [](std::size_t c) { return c > 0; }));
  return report;
}

struct TheoremReport {
  /// 3·n7, 24n − 6m, 6n + 36 − 6x, 48 + 3t, 48 + n7 on the triangulated drawing.
  std::array<long long, 5> chain{};
  Census original;
  Census triangulated;
  std::size_t added_edges = 0;
  /// Degree-7 vertices of the triangulated drawing; same ids in the original.
  std::vector<VertexId> degree7_vertices;
  std::size_t n7_original = 0;

  [[nodiscard]] bool conclusion_holds() const {
    return triangulated.n7 >= 24 && n7_original >= 24;
  }
};

/// Executes the lower-bound argument on a drawing of minimum degree at least 7.
/// Throws PreconditionError for lower minimum degree and IntegrityError when
/// any link of the chain fails.
inline TheoremReport verify_min_degree7_theorem(const CombinatorialDrawing& d) {
  require_valid(d, "verify_min_degree7_theorem");
  if (d.min_degree() < 7) {
    throw PreconditionError("verify_min_degree7_theorem: min degree " +
                            std::to_string(d.min_degree()) + " < 7");
  }
  TheoremReport report;
  report.original = census(d);
  const TriangulationResult tri = triangulate(d);
  report.added_edges = tri.steps.size();
  report.triangulated = census(tri.drawing);
  const Census& c = report.triangulated;
  if (!c.triangulated) throw IntegrityError("triangulate returned a non-triangulated drawing");

  const auto n = static_cast<long long>(c.n);
  const auto m = static_cast<long long>(c.m);
  const auto x = static_cast<long long>(c.x);
  const auto t = static_cast<long long>(c.t);
  const auto n7 = static_cast<long long>(c.n7);
  report.chain = {3 * n7, 24 * n - 6 * m, 6 * n + 36 - 6 * x, 48 + 3 * t, 48 + n7};
  for (std::size_t i = 0; i + 1 < report.chain.size(); ++i) {
    if (report.chain[i] < report.chain[i + 1]) {
      throw IntegrityError("chain link " + std::to_string(i) + " fails: " +
                           std::to_string(report.chain[i]) + " < " +
                           std::to_string(report.chain[i + 1]));
    }
  }

  for (VertexId v = 0; v < tri.drawing.vertex_count(); ++v) {
    if (tri.drawing.degree(v) != 7) continue;
    // Insertion never lowers a degree, so the original degree is 7 as well.
    if (d.degree(v) != 7) throw IntegrityError("degree-7 vertex lost degree during triangulation");
    report.degree7_vertices.push_back(v);
  }
  report.n7_original = report.original.n7;
  if (report.triangulated.n7 < 24) {
    throw IntegrityError("fewer than 24 degree-7 vertices after triangulation");
  }
  return report;
}

}  // namespace onep
