#include <gtest/gtest.h>

#include "test_support.hpp"

namespace onep {
namespace {

constexpr const char* kTriangle =
    "1pd 1\n"
    "# a triangle\n"
    "vertex 0\nvertex 1\nvertex 2\n"
    "edge 0 0 1\nedge 1 1 2\nedge 2 2 0\n"
    "rot 0 0.0 2.1\nrot 1 1.0 0.1\nrot 2 2.0 1.1\n";

ParseError parse_error(const std::string& text) {
  try {
    static_cast<void>(parse(text));
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return ParseError(0, 0, "");
}

TEST(Parse, Triangle) {
  const auto doc = parse(kTriangle);
  EXPECT_EQ(doc.drawing, triangle_drawing());
  EXPECT_EQ(doc.source.vertex_line, (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(doc.source.edge_line, (std::vector<std::size_t>{6, 7, 8}));
  EXPECT_EQ(doc.source.rotation_line, (std::vector<std::size_t>{9, 10, 11}));
  EXPECT_EQ(doc.drawing.mode(), GraphMode::simple);
}

TEST(Parse, OrderAndWhitespaceDoNotMatter) {
  const std::string shuffled =
      "  # leading comment\n1pd 1\n\n"
      "rot 2 1.1   2.0\t# trailing\n"
      "edge 2 2 0\nedge 0 0 1\nedge 1 1 2\n"
      "vertex 2\nvertex 0\nvertex 1\n"
      "rot 1 0.1 1.0\nrot 0 2.1 0.0";
  EXPECT_EQ(parse(shuffled).drawing, triangle_drawing());
}

TEST(Parse, Errors) {
  struct Case {
    std::string text;
    std::size_t line;
    std::size_t column;
    std::string needle;
  };
  const std::string head = "1pd 1\n";
  const std::vector<Case> cases = {
      {"", 1, 1, "missing header"},
      {"vertex 0\n", 1, 1, "expected header"},
      {"1pd 2\n", 1, 5, "unsupported format version"},
      {head + "vertex x\n", 2, 8, "vertex id"},
      {head + "vertex 0\nvertex 0\n", 3, 8, "duplicate vertex id"},
      {head + "vertex 0\nvertex 1\nedge 0 0 1\nedge 0 1 0\n", 5, 6, "duplicate edge id"},
      {head + "vertex 0\nedge 0 0 7\n", 3, 10, "dangling reference to vertex 7"},
      {head + "vertex 0\nvertex 1\nedge 0 0 1\nrot 0 3.0\n", 5, 7, "dangling reference to edge 3"},
      {head + "vertex 0\nvertex 1\nedge 0 0 1\nedge 1 0 1\ncross 0.0 0.1\n", 6, 11, "self-crossing forbidden"},
      {head + "vertex 0\nvertex 2\n", 3, 8, "vertex ids must be 0..n-1"},
      {head + "vertex 0\nvertex 1\nedge 1 0 1\n", 4, 6, "edge ids must be 0..m-1"},
      {head + "frobnicate 3\n", 2, 1, "unknown statement"},
      {head + "vertex 0\nrot 0\n", 3, 6, "at least one half-edge"},
      {head + "vertex 0\nvertex 1\nedge 0 0 1\nrot 0 0.2\n", 5, 7, ""},
      {head + "mode weird\n", 2, 6, "mode must be"},
      {head + "mode simple\nmode simple\n", 3, 1, "duplicate mode line"},
      {head + "edge 0 0\n", 2, 9, "expected 'edge EID U V'"},
  };
  for (const auto& c : cases) {
    const auto e = parse_error(c.text);
    EXPECT_EQ(e.line(), c.line) << c.text;
    EXPECT_EQ(e.column(), c.column) << c.text;
    EXPECT_NE(e.message().find(c.needle), std::string::npos) << e.what();
  }
}

TEST(Parse, StructuralProblemsReachValidation) {
  // Parses fine; validation reports adjacent edges crossing, pointing at the line.
  const std::string text =
      "1pd 1\n"
      "vertex 0\nvertex 1\nvertex 2\n"
      "edge 0 0 1\nedge 1 1 2\nedge 2 2 0\n"
      "rot 0 0.0 2.1\nrot 1 1.0 0.1\nrot 2 2.0 1.1\n"
      "cross 0.0 1.0\n";
  const auto doc = parse(text);
  const auto report = validate(doc.drawing);
  ASSERT_TRUE(report.has(ViolationKind::adjacent_edges_cross));
  const auto located = locate(report, doc);
  bool found = false;
  for (const auto& lv : located) {
    if (lv.violation.kind == ViolationKind::adjacent_edges_cross) {
      EXPECT_EQ(lv.line, std::optional<std::size_t>{11});
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Serialize, CanonicalText) {
  EXPECT_EQ(serialize(triangle_drawing()),
            "1pd 1\nmode simple\nvertex 0\nvertex 1\nvertex 2\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\n"
            "rot 0 0.0 2.1\nrot 1 0.1 1.0\nrot 2 1.1 2.0\n");
}

TEST(Serialize, RoundTripOnCorpus) {
  for (const auto& [name, d] : testing::corpus()) {
    const std::string text = serialize(d);
    const auto once = parse(text).drawing;
    EXPECT_EQ(once, d) << name;
    EXPECT_EQ(serialize(once), text) << name;
    EXPECT_EQ(parse(serialize(once)).drawing, once) << name;
  }
}

TEST(Serialize, RoundTripKeepsMultigraphsAndTriangulations) {
  for (const char* name : {"c4", "k4_crossed", "k6"}) {
    const auto tri = triangulate(fixture(name)).drawing;
    EXPECT_EQ(parse(serialize(tri)).drawing, tri) << name;
  }
}

TEST(Serialize, IsolatedVertexHasNoRotLine) {
  const CombinatorialDrawing lone(1, {}, {{}}, {});
  const std::string text = serialize(lone);
  EXPECT_EQ(text, "1pd 1\nmode simple\nvertex 0\n");
  EXPECT_EQ(parse(text).drawing, lone);
}

}  // namespace
}  // namespace onep
