#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

namespace onep {
namespace {

TEST(Stacked, Counts) {
  for (std::size_t depth : {0U, 1U, 10U, 50U}) {
    const auto d = stacked_triangulation(depth);
    const auto c = census(d);
    EXPECT_EQ(c.n, 3 + depth);
    EXPECT_EQ(c.m, depth == 0 ? 3 : 3 * c.n - 6);
    EXPECT_EQ(c.x, 0U);
    EXPECT_TRUE(c.triangulated);
    EXPECT_EQ(c.region_count, 2 + 2 * depth);
  }
}

TEST(Stacked, RandomIsValidAndTriangulated) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto d = random_stacked_triangulation(15, rng);
    EXPECT_TRUE(validate(d).accepted());
    EXPECT_TRUE(is_triangulated(d));
    EXPECT_EQ(d.edge_count(), 3 * d.vertex_count() - 6);
  }
}

TEST(Variants, DeterministicAndValid) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto d = random_drawing_variant(seed);
    EXPECT_EQ(d, random_drawing_variant(seed)) << seed;
    const auto report = validate(d);
    EXPECT_TRUE(report.accepted()) << seed;
  }
  // The family actually exercises crossings.
  std::size_t with_crossings = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) with_crossings += random_drawing_variant(seed).crossing_count() > 0;
  EXPECT_GT(with_crossings, 20U);
}

TEST(Polyhedra, OctahedronAndRhombicuboctahedron) {
  const auto oct = polyhedron_drawing(octahedron_points(), 2.0);
  EXPECT_EQ(census(oct).m, 12U);
  const auto rco = polyhedron_drawing(rhombicuboctahedron_points(), 4.0);
  EXPECT_TRUE(validate(rco).accepted());
  EXPECT_EQ(rco.vertex_count(), 24U);
  EXPECT_EQ(rco.edge_count(), 48U);
  std::map<std::size_t, std::size_t> face_degrees;
  for (const auto& r : enumerate_regions(rco)) ++face_degrees[r.degree()];
  EXPECT_EQ(face_degrees, (std::map<std::size_t, std::size_t>{{3, 8}, {4, 18}}));
}

TEST(Fixtures, K6) {
  const auto d = fixture("k6");
  EXPECT_TRUE(validate(d).accepted());
  const auto g = underlying_graph(d);
  EXPECT_EQ(g.edge_count(), 15U);  // complete
  EXPECT_EQ(d.min_degree(), 5U);
}

TEST(Fixtures, Fig1IsSevenRegularAndGood) {
  const auto d = fixture("fig1");
  EXPECT_TRUE(validate(d).accepted());
  for (VertexId v = 0; v < d.vertex_count(); ++v) EXPECT_EQ(d.degree(v), 7U);
  // Every square contributes one crossing pair; every edge is crossed at most once.
  std::vector<int> uses(d.edge_count(), 0);
  for (const auto& rec : d.crossings()) {
    ++uses[rec.first.edge];
    ++uses[rec.second.edge];
  }
  EXPECT_EQ(std::count(uses.begin(), uses.end(), 1), 36);
  EXPECT_EQ(std::count(uses.begin(), uses.end(), 0), 48);
}

TEST(Fixtures, NamesAndErrors) {
  for (const auto& name : fixture_names()) EXPECT_TRUE(validate(fixture(name)).accepted()) << name;
  EXPECT_EQ(fixture("stacked(4)"), stacked_triangulation(4));
  EXPECT_THROW(fixture("nope"), std::invalid_argument);
  EXPECT_THROW(fixture("stacked()"), std::invalid_argument);
  EXPECT_THROW(fixture("stacked(x)"), std::invalid_argument);
}

TEST(Fixtures, DataFilesMatchGenerators) {
  for (const auto& name : fixture_names()) {
    const auto text = testing::read_text(testing::data_path(name + ".1pd"));
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(parse(text).drawing, fixture(name)) << name;
    EXPECT_EQ(text, serialize(fixture(name))) << name;
  }
  EXPECT_EQ(parse(testing::read_text(testing::data_path("glue_k2.1pd"))).drawing, testing::glued_fig1(2));
}

TEST(CrossingInsertion, AcrossEdgePreconditions) {
  const auto k6 = fixture("k6");
  const auto crossed = static_cast<EdgeId>(k6.crossings()[0].first.edge);
  EXPECT_THROW(add_crossing_across_edge(k6, crossed), PreconditionError);
  // Edges of a quadrilateral are not flanked by two triangles.
  EXPECT_THROW(add_crossing_across_edge(cycle_drawing(4), 0), PreconditionError);
  // In K4 the apexes across an edge are already adjacent, so the new edge is a parallel one.
  const auto doubled = add_crossing_across_edge(fixture("k4_planar"), 0);
  EXPECT_EQ(doubled.mode(), GraphMode::multigraph);
  EXPECT_TRUE(validate(doubled).accepted());
}

TEST(CrossingInsertion, QuadPreconditions) {
  const auto tri = triangle_drawing();
  EXPECT_THROW(add_crossing_pair_in_quad(tri, enumerate_regions(tri)[0]), PreconditionError);
  const auto k4c = fixture("k4_crossed");
  for (const auto& r : enumerate_regions(k4c)) {
    if (!r.uncrossed()) {
      EXPECT_THROW(add_crossing_pair_in_quad(k4c, r), PreconditionError);
    }
  }
}

TEST(RemoveEdge, RenumbersDensely) {
  const auto d = fixture("k4_planar");
  const auto out = remove_uncrossed_edge(d, 0);
  EXPECT_EQ(out.edge_count(), 5U);
  EXPECT_TRUE(validate(out).accepted());
  EXPECT_THROW(remove_uncrossed_edge(fixture("k4_crossed"), fixture("k4_crossed").crossings()[0].first.edge),
               PreconditionError);
}

TEST(InsertVertex, RequiresUncrossedRegion) {
  const auto d = fixture("k4_crossed");
  for (const auto& r : enumerate_regions(d)) {
    if (!r.uncrossed()) {
      EXPECT_THROW(insert_vertex_in_region(d, r), PreconditionError);
    }
  }
}

TEST(Glue, CountsAndHub) {
  const auto base = fixture("fig1");
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto g = glue_copies(GlueSpec{base, 0, k});
    EXPECT_EQ(g.vertex_count(), 23 * k + 1) << k;
    EXPECT_EQ(g.edge_count(), 84 * k) << k;
    EXPECT_EQ(g.crossing_count(), 18 * k) << k;
    EXPECT_EQ(g.degree(0), 7 * k) << k;
    EXPECT_TRUE(validate(g).accepted()) << k;
    EXPECT_EQ(census(g).n7, k == 1 ? 24 : 23 * k) << k;
  }
  EXPECT_EQ(glue_copies(GlueSpec{base, 0, 1}), base);
}

TEST(Glue, HubSeparatesCopies) {
  const auto g = underlying_graph(testing::glued_fig1(3));
  std::vector<char> removed(g.vertex_count(), 0);
  removed[0] = 1;
  const auto label = g.components(removed);
  std::map<int, std::size_t> sizes;
  for (const int l : label) {
    if (l >= 0) ++sizes[l];
  }
  ASSERT_EQ(sizes.size(), 3U);
  for (const auto& [l, s] : sizes) EXPECT_EQ(s, 23U);
  // Copy i owns ids 1 + 23i .. 23 + 23i.
  for (VertexId v = 1; v < g.vertex_count(); ++v) EXPECT_EQ(label[v], label[1 + 23 * ((v - 1) / 23)]);
}

TEST(Glue, OtherHubAndErrors) {
  const auto base = fixture("k4_planar");
  const auto g = glue_copies(GlueSpec{base, 2, 3});
  EXPECT_EQ(g.vertex_count(), 10U);
  EXPECT_EQ(g.degree(0), 9U);
  EXPECT_TRUE(validate(g).accepted());
  EXPECT_THROW(glue_copies(GlueSpec{base, 4, 2}), std::invalid_argument);
  EXPECT_THROW(glue_copies(GlueSpec{base, 0, 0}), std::invalid_argument);
  EXPECT_THROW(glue_copies(GlueSpec{triangulate(fixture("c4")).drawing, 0, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace onep
