#pragma once

// Command-line front end. Exit status: 0 success, 1 violation or failed
// check, 2 usage or parse error. Reports are key=value lines.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "onep/census.hpp"
#include "onep/constructions.hpp"
#include "onep/io.hpp"
#include "onep/matching.hpp"
#include "onep/svg.hpp"
#include "onep/triangulator.hpp"
#include "onep/validate.hpp"

namespace onep::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

inline void print_violations(std::ostream& out, const ParsedDocument& doc, const ValidationReport& report) {
  out << "violations=" << report.violations.size() << '\n';
  for (const auto& lv : locate(report, doc)) {
    out << "violation kind=" << to_string(lv.violation.kind);
    if (lv.line) out << " line=" << *lv.line;
    out << " message=\"" << lv.violation.message << "\"\n";
  }
}

// Parses and validates; prints violations and returns false when rejected.
inline bool load_valid(const std::string& path, std::ostream& out, ParsedDocument& doc) {
  doc = parse(read_file(path));
  const auto report = validate(doc.drawing);
  if (report.accepted()) return true;
  out << "status=rejected\n";
  print_violations(out, doc, report);
  return false;
}

inline void print_census(std::ostream& out, const Census& c, const std::string& prefix = "") {
  out << prefix << "n=" << c.n << '\n'
      << prefix << "m=" << c.m << '\n'
      << prefix << "x=" << c.x << '\n'
      << prefix << "t=" << c.t << '\n'
      << prefix << "n7=" << c.n7 << '\n'
      << prefix << "min_degree=" << c.min_degree << '\n'
      << prefix << "regions=" << c.region_count << '\n'
      << prefix << "triangulated=" << (c.triangulated ? "true" : "false") << '\n';
  for (const auto& [deg, count] : c.degree_histogram) out << prefix << "degree." << deg << '=' << count << '\n';
}

inline std::string format_set(const std::vector<VertexId>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toolkit for combinatorial 1-planar drawings", "onep"};
  app.require_subcommand(1);

  std::string file;
  std::string output;

  auto* validate_cmd = app.add_subcommand("validate", "Check a drawing for goodness, 1-planarity and sphere embedding");
  validate_cmd->add_option("FILE", file, "Drawing (.1pd)")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Census and counting identities");
  stats_cmd->add_option("FILE", file, "Drawing (.1pd)")->required();

  auto* tri_cmd = app.add_subcommand("triangulate", "Insert uncrossed edges until every region is a triangle");
  tri_cmd->add_option("FILE", file, "Drawing (.1pd)")->required();
  tri_cmd->add_option("-o,--output", output, "Output drawing")->required();

  auto* theorem_cmd = app.add_subcommand("theorem", "Run the degree-7 lower-bound chain");
  theorem_cmd->add_option("FILE", file, "Drawing (.1pd)")->required();

  // Read as text: CLI11 turns a bare "--certificate" into one empty token.
  std::vector<std::string> separator_text;
  bool certificate_given = false;
  auto* matching_cmd = app.add_subcommand("matching", "Maximum matching with a Tutte-Berge certificate");
  matching_cmd->add_option("FILE", file, "Drawing (.1pd)")->required();
  auto* cert_opt = matching_cmd->add_option("--certificate", separator_text, "Separator set U (vertex ids)")
                       ->expected(0, -1);

  auto* construct_cmd = app.add_subcommand("construct", "Generate drawings");
  construct_cmd->require_subcommand(1);
  std::size_t copies = 1;
  std::string base_file;
  VertexId hub = 0;
  auto* glue_cmd = construct_cmd->add_subcommand("glue", "Copies of a base drawing glued at one vertex");
  glue_cmd->add_option("--copies", copies, "Number of copies")->required()->check(CLI::PositiveNumber);
  glue_cmd->add_option("--base", base_file, "Base drawing (default: fig1 fixture)");
  glue_cmd->add_option("--hub", hub, "Glue vertex of the base (default 0)");
  glue_cmd->add_option("-o,--output", output, "Output drawing")->required();
  std::string fixture_name;
  auto* fixture_cmd = construct_cmd->add_subcommand("fixture", "Write a named fixture");
  fixture_cmd->add_option("NAME", fixture_name, "fig1, k4_planar, k4_crossed, k6, c4, octahedron, stacked(D)")
      ->required();
  fixture_cmd->add_option("-o,--output", output, "Output drawing")->required();

  std::optional<std::size_t> outer;
  auto* render_cmd = app.add_subcommand("render", "Straight-line SVG of the planarization");
  render_cmd->add_option("FILE", file, "Drawing (.1pd)")->required();
  render_cmd->add_option("-o,--output", output, "Output SVG")->required();
  render_cmd->add_option("--outer", outer, "Index of the outer region (canonical order)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  certificate_given = cert_opt->count() > 0;

  try {
    ParsedDocument doc;
    if (validate_cmd->parsed()) {
      doc = parse(detail::read_file(file));
      const auto report = validate(doc.drawing);
      out << "status=" << (report.accepted() ? "accepted" : "rejected") << '\n';
      out << "n=" << doc.drawing.vertex_count() << "\nm=" << doc.drawing.edge_count()
          << "\nx=" << doc.drawing.crossing_count() << '\n';
      if (report.accepted()) {
        out << "min_degree=" << doc.drawing.min_degree() << '\n';
        return kOk;
      }
      detail::print_violations(out, doc, report);
      return kViolation;
    }

    if (stats_cmd->parsed()) {
      if (!detail::load_valid(file, out, doc)) return kViolation;
      const auto report = check_identities(doc.drawing);
      detail::print_census(out, report.census);
      for (const auto& c : report.checks) {
        out << "identity." << c.name << '=';
        if (!c.applicable) {
          out << "inapplicable (" << c.precondition << ")\n";
          continue;
        }
        out << (c.holds ? "holds" : "FAILS") << " (" << c.left << ' ' << to_string(c.relation) << ' ' << c.right
            << ")\n";
      }
      return report.all_applicable_hold() ? kOk : kViolation;
    }

    if (tri_cmd->parsed()) {
      if (!detail::load_valid(file, out, doc)) return kViolation;
      const auto result = triangulate(doc.drawing);
      detail::write_file(output, serialize(result.drawing));
      out << "added_edges=" << result.steps.size() << '\n';
      for (std::size_t i = 0; i < result.steps.size(); ++i) {
        const auto& s = result.steps[i];
        out << "step." << i << "=edge " << s.new_edge << " (" << s.u << ',' << s.v << ") in region of degree "
            << s.region.degree() << '\n';
      }
      detail::print_census(out, census(result.drawing), "result.");
      out << "output=" << output << '\n';
      return kOk;
    }

    if (theorem_cmd->parsed()) {
      if (!detail::load_valid(file, out, doc)) return kViolation;
      try {
        const auto report = verify_min_degree7_theorem(doc.drawing);
        out << "status=holds\n";
        out << "added_edges=" << report.added_edges << '\n';
        static constexpr const char* names[] = {"3n7", "24n-6m", "6n+36-6x", "48+3t", "48+n7"};
        for (std::size_t i = 0; i < report.chain.size(); ++i) {
          out << "chain." << names[i] << '=' << report.chain[i] << '\n';
        }
        out << "n7=" << report.triangulated.n7 << '\n';
        out << "n7_original=" << report.n7_original << '\n';
        out << "conclusion=n7>=24 " << (report.conclusion_holds() ? "holds" : "FAILS") << '\n';
        return report.conclusion_holds() ? kOk : kViolation;
      } catch (const PreconditionError& e) {
        out << "status=precondition_failed\nreason=\"" << e.what() << "\"\n";
        return kViolation;
      } catch (const IntegrityError& e) {
        out << "status=integrity_failure\nreason=\"" << e.what() << "\"\n";
        return kViolation;
      }
    }

    if (matching_cmd->parsed()) {
      if (!detail::load_valid(file, out, doc)) return kViolation;
      const auto g = underlying_graph(doc.drawing);
      auto result = maximum_matching(g);
      std::vector<VertexId> separator;
      for (const auto& token : separator_text) {
        if (token.empty()) continue;
        VertexId v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
          throw UsageError("certificate: '" + token + "' is not a vertex id");
        }
        separator.push_back(v);
      }
      try {
        result.certificate =
            certificate_given ? tutte_berge_certificate(g, separator) : best_single_vertex_certificate(g);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("certificate: ") + e.what());
      }
      const auto& cert = *result.certificate;
      out << "n=" << g.vertex_count() << "\nm=" << g.edge_count() << '\n';
      out << "size=" << result.size() << '\n';
      out << "certificate U=" << detail::format_set(cert.separator) << " odd_components=" << cert.odd_components
          << " bound=" << cert.bound << '\n';
      out << "size<=" << cert.bound << ' ' << (result.size() <= cert.bound ? "holds" : "FAILS") << '\n';
      out << "lemma_bound=" << lemma_matching_bound(static_cast<long long>(g.vertex_count())).to_string() << '\n';
      for (const auto& [u, v] : result.matching) out << "pair=" << u << '-' << v << '\n';
      return result.size() <= cert.bound ? kOk : kViolation;
    }

    if (glue_cmd->parsed()) {
      GlueSpec spec;
      if (base_file.empty()) {
        spec.base = fixture("fig1");
      } else {
        if (!detail::load_valid(base_file, out, doc)) return kViolation;
        spec.base = doc.drawing;
      }
      spec.hub = hub;
      spec.copies = copies;
      const auto glued = glue_copies(spec);
      detail::write_file(output, serialize(glued));
      out << "n=" << glued.vertex_count() << "\nm=" << glued.edge_count() << "\nx=" << glued.crossing_count()
          << "\nhub=0\nhub_degree=" << glued.degree(0) << "\noutput=" << output << '\n';
      return kOk;
    }

    if (fixture_cmd->parsed()) {
      const auto d = fixture(fixture_name);
      detail::write_file(output, serialize(d));
      out << "n=" << d.vertex_count() << "\nm=" << d.edge_count() << "\nx=" << d.crossing_count()
          << "\noutput=" << output << '\n';
      return kOk;
    }

    if (render_cmd->parsed()) {
      if (!detail::load_valid(file, out, doc)) return kViolation;
      try {
        const auto result = render_svg(doc.drawing, outer);
        detail::write_file(output, result.svg);
        out << "outer_region=" << result.layout.outer_region << "\nsweeps=" << result.layout.sweeps
            << "\ncrossings_drawn=" << result.crossings_drawn
            << "\nself_check=" << (result.self_check_passed() ? "pass" : "warning") << '\n';
        for (const auto& w : result.warnings) out << "warning=\"" << w << "\"\n";
        out << "output=" << output << '\n';
        return kOk;
      } catch (const LayoutError& e) {
        out << "status=layout_failed\nreason=\"" << e.what() << "\"\n";
        return kViolation;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace onep::cli
