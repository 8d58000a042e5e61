#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"

namespace onep {
namespace {

// Each edge of `sub` appears in `super` with the same ends, and every
// rotation of `sub` is a cyclic subsequence of the corresponding one.
bool is_subdrawing(const CombinatorialDrawing& sub, const CombinatorialDrawing& super) {
  if (sub.vertex_count() != super.vertex_count() || sub.edge_count() > super.edge_count()) return false;
  for (std::size_t e = 0; e < sub.edge_count(); ++e) {
    if (!(sub.edges()[e] == super.edges()[e])) return false;
  }
  if (sub.crossings() != super.crossings()) return false;
  for (VertexId v = 0; v < sub.vertex_count(); ++v) {
    std::vector<HalfEdge> kept;
    for (const HalfEdge h : super.rotation(v)) {
      if (h.edge < sub.edge_count()) kept.push_back(h);
    }
    const auto& rot = sub.rotation(v);
    if (kept.size() != rot.size()) return false;
    if (kept.empty()) continue;
    const auto start = std::find(kept.begin(), kept.end(), rot.front());
    if (start == kept.end()) return false;
    std::rotate(kept.begin(), start, kept.end());
    if (kept != rot) return false;
  }
  return true;
}

TEST(Triangulate, SquareGetsOneDiagonalPerSide) {
  const auto result = triangulate(fixture("c4"));
  ASSERT_EQ(result.steps.size(), 2U);
  for (const auto& s : result.steps) {
    EXPECT_EQ(std::minmax(s.u, s.v), std::minmax(VertexId{0}, VertexId{2}));
  }
  EXPECT_EQ(result.drawing.edge_count(), 6U);
  EXPECT_EQ(result.drawing.mode(), GraphMode::multigraph);
  EXPECT_TRUE(is_triangulated(result.drawing));
  EXPECT_TRUE(validate(result.drawing).accepted());
}

TEST(Triangulate, TriangulatedInputIsUntouched) {
  for (const char* name : {"k4_planar", "octahedron", "fig1", "k6"}) {
    const auto d = fixture(name);
    const auto result = triangulate(d);
    EXPECT_TRUE(result.steps.empty()) << name;
    EXPECT_EQ(result.drawing.edge_count(), d.edge_count()) << name;
    EXPECT_TRUE(is_subdrawing(d, result.drawing)) << name;
  }
}

TEST(Triangulate, CrossedSquareClosesItsOuterFace) {
  const auto result = triangulate(fixture("k4_crossed"));
  EXPECT_EQ(result.drawing.edge_count(), 7U);
  const auto c = census(result.drawing);
  EXPECT_EQ(c.t, 2U);
  EXPECT_TRUE(c.triangulated);
}

TEST(Triangulate, RejectsInvalidInput) {
  DrawingParts parts = DrawingParts::of(fixture("k4_planar"));
  std::reverse(parts.rotations[0].begin(), parts.rotations[0].end());
  parts.rotations[0].push_back(parts.rotations[1].front());
  EXPECT_THROW(triangulate(std::move(parts).build()), PreconditionError);
}

TEST(Triangulate, ContractOnCorpus) {
  for (const auto& [name, d] : testing::corpus()) {
    const auto result = triangulate(d);
    EXPECT_TRUE(is_triangulated(result.drawing)) << name;
    EXPECT_TRUE(validate(result.drawing).accepted()) << name;
    EXPECT_TRUE(is_subdrawing(d, result.drawing)) << name;
    EXPECT_EQ(result.drawing.crossing_count(), d.crossing_count()) << name;
    // Replay: the potential drops by one per inserted edge.
    CombinatorialDrawing cur = d;
    std::size_t potential = triangulation_potential(enumerate_regions(cur));
    EXPECT_EQ(potential, result.steps.size()) << name;
    for (const auto& step : result.steps) {
      const auto regions = enumerate_regions(cur);
      ASSERT_NE(std::find(regions.begin(), regions.end(), step.region), regions.end()) << name;
      cur = insert_edge_in_region(cur, step.region, step.corner_a, step.corner_b);
      const std::size_t next = triangulation_potential(enumerate_regions(cur));
      EXPECT_EQ(next + 1, potential) << name;
      potential = next;
    }
    EXPECT_TRUE(testing::same_up_to_mode(cur, result.drawing)) << name;
    // Idempotent.
    EXPECT_TRUE(triangulate(result.drawing).steps.empty()) << name;
  }
}

TEST(InsertEdge, SplitsRegionIntoDegreesSummingToPlusTwo) {
  const auto d = cycle_drawing(5);
  const auto regions = enumerate_regions(d);
  ASSERT_EQ(regions.size(), 2U);
  const auto out = insert_edge_in_region(d, regions[0], 0, 2);
  std::multiset<std::size_t> degrees;
  for (const auto& r : enumerate_regions(out)) degrees.insert(r.degree());
  EXPECT_EQ(degrees, (std::multiset<std::size_t>{3, 4, 5}));
  EXPECT_TRUE(validate(out).accepted());
}

TEST(InsertEdge, Preconditions) {
  const auto d = fixture("k4_crossed");
  const auto regions = enumerate_regions(d);
  const auto outer = std::find_if(regions.begin(), regions.end(), [](const Region& r) { return r.uncrossed(); });
  ASSERT_NE(outer, regions.end());
  EXPECT_THROW(insert_edge_in_region(d, *outer, 0, 1), PreconditionError);  // consecutive
  EXPECT_THROW(insert_edge_in_region(d, *outer, 0, 3), PreconditionError);  // consecutive, wrapping
  EXPECT_THROW(insert_edge_in_region(d, *outer, 0, 9), PreconditionError);  // out of range
  const auto crossed = std::find_if(regions.begin(), regions.end(), [](const Region& r) { return !r.uncrossed(); });
  ASSERT_NE(crossed, regions.end());
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      EXPECT_THROW(insert_edge_in_region(d, *crossed, a, b), PreconditionError);
    }
  }
  const auto foreign = enumerate_regions(cycle_drawing(6));
  EXPECT_THROW(insert_edge_in_region(d, foreign[0], 0, 2), PreconditionError);
  EXPECT_NO_THROW(insert_edge_in_region(d, *outer, 0, 2));
}

TEST(InsertEdge, CornerPairPrefersNonLoops) {
  // Walk 0,1,2,1 around a path: the only admissible pairs are (0,2) and (1,1).
  Region r;
  r.corners = {Corner{Corner::Kind::vertex, 0, {0, 0}}, Corner{Corner::Kind::vertex, 1, {1, 0}},
               Corner{Corner::Kind::vertex, 2, {1, 1}}, Corner{Corner::Kind::vertex, 1, {0, 1}}};
  const auto pair = detail::choose_corner_pair(r);
  ASSERT_TRUE(pair);
  EXPECT_EQ(*pair, (std::pair<std::size_t, std::size_t>{0, 2}));
  // With the corners forced into a loop-only configuration the loop is chosen.
  Region loop_only;
  loop_only.corners = {Corner{Corner::Kind::vertex, 3, {0, 0}}, Corner{Corner::Kind::crossing, 0, {1, 0}},
                       Corner{Corner::Kind::vertex, 3, {2, 0}}, Corner{Corner::Kind::crossing, 1, {3, 0}}};
  const auto loop_pair = detail::choose_corner_pair(loop_only);
  ASSERT_TRUE(loop_pair);
  EXPECT_EQ(*loop_pair, (std::pair<std::size_t, std::size_t>{0, 2}));
}

}  // namespace
}  // namespace onep
