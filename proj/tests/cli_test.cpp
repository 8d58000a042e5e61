#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "onep/cli.hpp"
#include "test_support.hpp"

namespace onep {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("onep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    cli::detail::write_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

TEST_F(Cli, ValidateAcceptsFixtures) {
  for (const auto& name : fixture_names()) {
    const auto r = run_cli({"validate", testing::data_path(name + ".1pd")});
    EXPECT_EQ(r.code, 0) << name << r.out << r.err;
    EXPECT_NE(r.out.find("status=accepted"), std::string::npos);
  }
}

TEST_F(Cli, ValidateReportsViolationWithLine) {
  const auto r = run_cli({"validate", testing::data_path("bad_adjacent_cross.1pd")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("status=rejected"), std::string::npos);
  EXPECT_NE(r.out.find("violation kind=adjacent_edges_cross line="), std::string::npos) << r.out;
}

TEST_F(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"validate"}).code, 2);
  EXPECT_EQ(run_cli({"validate", path("missing.1pd")}).code, 2);
  const auto bad = write("bad.1pd", "1pd 1\nvertex 0\nvertex 0\n");
  const auto r = run_cli({"validate", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3, column 8"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"construct", "fixture", "nope", "-o", path("x.1pd")}).code, 2);
  EXPECT_EQ(run_cli({"construct", "glue", "--copies", "0", "-o", path("x.1pd")}).code, 2);
  EXPECT_EQ(run_cli({"construct", "glue", "--copies", "2", "--hub", "99", "-o", path("x.1pd")}).code, 2);
}

TEST_F(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("triangulate"), std::string::npos);
}

TEST_F(Cli, StatsOnFig1) {
  const auto r = run_cli({"stats", testing::data_path("fig1.1pd")});
  EXPECT_EQ(r.code, 0) << r.out;
  for (const char* line : {"n=24\n", "m=84\n", "x=18\n", "t=8\n", "n7=24\n", "min_degree=7\n", "triangulated=true\n",
                           "identity.edges_vs_crossings=holds (84 = 84)\n", "identity.edge_bound=holds (168 <= 168)\n"}) {
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  }
}

TEST_F(Cli, StatsMarksInapplicableIdentities) {
  const auto r = run_cli({"stats", testing::data_path("c4.1pd")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("identity.edges_vs_crossings=inapplicable (not triangulated)"), std::string::npos);
}

TEST_F(Cli, TriangulateWritesResult) {
  const auto out_file = path("tri.1pd");
  const auto r = run_cli({"triangulate", testing::data_path("c4.1pd"), "-o", out_file});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("added_edges=2"), std::string::npos);
  const auto tri = parse(testing::read_text(out_file)).drawing;
  EXPECT_EQ(tri, triangulate(fixture("c4")).drawing);
}

TEST_F(Cli, Theorem) {
  const auto fig1 = run_cli({"theorem", testing::data_path("fig1.1pd")});
  EXPECT_EQ(fig1.code, 0);
  for (const char* line : {"chain.3n7=72\n", "chain.24n-6m=72\n", "chain.6n+36-6x=72\n", "chain.48+3t=72\n",
                           "chain.48+n7=72\n", "n7=24\n"}) {
    EXPECT_NE(fig1.out.find(line), std::string::npos) << line;
  }
  const auto glued = run_cli({"theorem", testing::data_path("glue_k2.1pd")});
  EXPECT_EQ(glued.code, 0);
  EXPECT_NE(glued.out.find("n7_original=46\n"), std::string::npos) << glued.out;
  const auto k6 = run_cli({"theorem", testing::data_path("k6.1pd")});
  EXPECT_EQ(k6.code, 1);
  EXPECT_NE(k6.out.find("status=precondition_failed"), std::string::npos);
}

TEST_F(Cli, Matching) {
  const auto r = run_cli({"matching", testing::data_path("glue_k2.1pd")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("size=23\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("size<=23 holds\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lemma_bound=23\n"), std::string::npos);
  const auto explicit_u = run_cli({"matching", testing::data_path("glue_k2.1pd"), "--certificate", "0", "0"});
  EXPECT_EQ(explicit_u.code, 0);
  EXPECT_NE(explicit_u.out.find("certificate U={0} odd_components=2 bound=23\n"), std::string::npos)
      << explicit_u.out;
  const auto empty_u = run_cli({"matching", testing::data_path("fig1.1pd"), "--certificate"});
  EXPECT_EQ(empty_u.code, 0) << empty_u.err;
  EXPECT_NE(empty_u.out.find("certificate U={} odd_components=0 bound=12"), std::string::npos) << empty_u.out;
  EXPECT_EQ(run_cli({"matching", testing::data_path("fig1.1pd"), "--certificate", "99"}).code, 2);
  EXPECT_EQ(run_cli({"matching", testing::data_path("fig1.1pd"), "--certificate", "x"}).code, 2);
}

TEST_F(Cli, ConstructGlueAndFixture) {
  const auto glue = path("glue.1pd");
  const auto r = run_cli({"construct", "glue", "--copies", "3", "-o", glue});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n=70\n"), std::string::npos);
  EXPECT_EQ(parse(testing::read_text(glue)).drawing, testing::glued_fig1(3));

  const auto k4 = path("k4.1pd");
  EXPECT_EQ(run_cli({"construct", "fixture", "k4_planar", "-o", k4}).code, 0);
  const auto custom = path("custom.1pd");
  EXPECT_EQ(run_cli({"construct", "glue", "--copies", "2", "--base", k4, "--hub", "1", "-o", custom}).code, 0);
  EXPECT_EQ(parse(testing::read_text(custom)).drawing, glue_copies(GlueSpec{fixture("k4_planar"), 1, 2}));

  const auto stacked = path("stacked.1pd");
  EXPECT_EQ(run_cli({"construct", "fixture", "stacked(5)", "-o", stacked}).code, 0);
  EXPECT_EQ(parse(testing::read_text(stacked)).drawing, stacked_triangulation(5));
}

TEST_F(Cli, Render) {
  const auto svg = path("fig1.svg");
  const auto r = run_cli({"render", testing::data_path("fig1.1pd"), "-o", svg});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("crossings_drawn=18\n"), std::string::npos);
  EXPECT_NE(r.out.find("self_check=pass\n"), std::string::npos);
  EXPECT_NE(testing::read_text(svg).find("</svg>"), std::string::npos);
  EXPECT_EQ(run_cli({"render", testing::data_path("fig1.1pd"), "-o", svg, "--outer", "3"}).code, 0);
  EXPECT_EQ(run_cli({"render", testing::data_path("fig1.1pd"), "-o", svg, "--outer", "500"}).code, 2);
}

TEST_F(Cli, ExitCodesAcrossCorpusFiles) {
  // Every valid drawing exits 0 on validate and stats; a rejected one exits 1.
  for (const auto& [name, d] : testing::corpus()) {
    const auto file = write("d.1pd", serialize(d));
    EXPECT_EQ(run_cli({"validate", file}).code, 0) << name;
    EXPECT_EQ(run_cli({"stats", file}).code, 0) << name;
    EXPECT_EQ(run_cli({"theorem", file}).code, d.min_degree() >= 7 ? 0 : 1) << name;
  }
  const auto bad = testing::data_path("bad_adjacent_cross.1pd");
  for (const std::string cmd : {"stats", "theorem", "matching"}) EXPECT_EQ(run_cli({cmd, bad}).code, 1) << cmd;
  EXPECT_EQ(run_cli({"triangulate", bad, "-o", path("t.1pd")}).code, 1);
  EXPECT_EQ(run_cli({"render", bad, "-o", path("t.svg")}).code, 1);
}

}  // namespace
}  // namespace onep
