#pragma once

// Line-oriented text format for drawings (".1pd").
//
//   1pd 1                     format header, version 1
//   mode simple|multigraph    optional, default simple
//   vertex ID
//   edge EID U V
//   rot VID EID.END ...       clockwise edge-ends around VID
//   cross E.EEND F.FEND       clockwise: E toward EEND, F toward FEND, then the opposites
//
// '#' starts a comment. Vertex and edge ids must be 0..n-1 and 0..m-1.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/validate.hpp"

namespace onep {

inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Source line of every declaration, for pointing violations at the input.
struct SourceMap {
  std::vector<std::size_t> vertex_line;
  std::vector<std::size_t> edge_line;
  std::vector<std::size_t> rotation_line;  ///< 0 when the vertex had no rot line
  std::map<CrossingRecord, std::size_t> crossing_line;  ///< keyed by canonical record
};

struct ParsedDocument {
  CombinatorialDrawing drawing;
  SourceMap source;
};

struct LocatedViolation {
  Violation violation;
  std::optional<std::size_t> line;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

inline std::uint32_t parse_id(const Token& tok, std::size_t line, const char* what) {
  std::uint32_t value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || tok.text.empty()) {
    throw ParseError(line, tok.column,
                     std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
  }
  return value;
}

inline HalfEdge parse_half_edge(const Token& tok, std::size_t line) {
  const auto dot = tok.text.find('.');
  if (dot == std::string_view::npos || dot + 2 != tok.text.size() ||
      (tok.text[dot + 1] != '0' && tok.text[dot + 1] != '1')) {
    throw ParseError(line, tok.column,
                     "expected half-edge EDGE.END with END 0 or 1, got '" + std::string(tok.text) + "'");
  }
  const Token edge_part{tok.text.substr(0, dot), tok.column};
  return {parse_id(edge_part, line, "edge id"), static_cast<std::uint8_t>(tok.text[dot + 1] - '0')};
}

}  // namespace detail

/// Parses a document. Syntax errors, duplicate ids, dangling references and
/// self-crossings raise ParseError; every other defect is left for validate().
inline ParsedDocument parse(std::string_view text) {
  struct PendingEdge {
    std::uint32_t u, v;
    std::size_t line, column_id, column_u, column_v;
  };
  struct PendingRot {
    std::vector<std::pair<HalfEdge, std::size_t>> halves;  // with column
    std::size_t line;
  };
  struct PendingCross {
    HalfEdge a, b;
    std::size_t line, column_a, column_b;
  };

  std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> vertices;  // line, column
  std::map<std::uint32_t, PendingEdge> edges;
  std::map<std::uint32_t, PendingRot> rots;
  std::map<std::uint32_t, std::size_t> rot_vertex_column;
  std::vector<PendingCross> crosses;
  GraphMode mode = GraphMode::simple;
  bool have_header = false;
  bool have_mode = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;

    const detail::Token& kw = tokens[0];
    const auto expect_count = [&](std::size_t count, const char* usage) {
      if (tokens.size() != count) {
        const std::size_t col = tokens.size() < count ? line.size() + 1 : tokens[count].column;
        throw ParseError(line_no, col, std::string("expected '") + usage + "'");
      }
    };

    if (!have_header) {
      if (kw.text != "1pd") throw ParseError(line_no, kw.column, "expected header '1pd VERSION'");
      expect_count(2, "1pd VERSION");
      const auto version = detail::parse_id(tokens[1], line_no, "format version");
      if (version != kFormatVersion) {
        throw ParseError(line_no, tokens[1].column, "unsupported format version " + std::to_string(version));
      }
      have_header = true;
    } else if (kw.text == "mode") {
      expect_count(2, "mode simple|multigraph");
      if (have_mode) throw ParseError(line_no, kw.column, "duplicate mode line");
      if (tokens[1].text == "simple") mode = GraphMode::simple;
      else if (tokens[1].text == "multigraph") mode = GraphMode::multigraph;
      else throw ParseError(line_no, tokens[1].column, "mode must be 'simple' or 'multigraph'");
      have_mode = true;
    } else if (kw.text == "vertex") {
      expect_count(2, "vertex ID");
      const auto id = detail::parse_id(tokens[1], line_no, "vertex id");
      if (!vertices.emplace(id, std::pair{line_no, tokens[1].column}).second) {
        throw ParseError(line_no, tokens[1].column, "duplicate vertex id " + std::to_string(id));
      }
    } else if (kw.text == "edge") {
      expect_count(4, "edge EID U V");
      const auto id = detail::parse_id(tokens[1], line_no, "edge id");
      PendingEdge e{detail::parse_id(tokens[2], line_no, "vertex id"),
                    detail::parse_id(tokens[3], line_no, "vertex id"), line_no, tokens[1].column, tokens[2].column,
                    tokens[3].column};
      if (!edges.emplace(id, e).second) {
        throw ParseError(line_no, tokens[1].column, "duplicate edge id " + std::to_string(id));
      }
    } else if (kw.text == "rot") {
      if (tokens.size() < 3) {
        throw ParseError(line_no, line.size() + 1, "expected 'rot VID EID.END ...' with at least one half-edge");
      }
      const auto v = detail::parse_id(tokens[1], line_no, "vertex id");
      PendingRot rot{{}, line_no};
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        rot.halves.emplace_back(detail::parse_half_edge(tokens[i], line_no), tokens[i].column);
      }
      if (!rots.emplace(v, std::move(rot)).second) {
        throw ParseError(line_no, tokens[1].column, "duplicate rotation for vertex " + std::to_string(v));
      }
      rot_vertex_column[v] = tokens[1].column;
    } else if (kw.text == "cross") {
      expect_count(3, "cross E.END F.END");
      PendingCross c{detail::parse_half_edge(tokens[1], line_no), detail::parse_half_edge(tokens[2], line_no),
                     line_no, tokens[1].column, tokens[2].column};
      if (c.a.edge == c.b.edge) {
        throw ParseError(line_no, tokens[2].column,
                         "self-crossing forbidden: edge " + std::to_string(c.a.edge) + " named twice");
      }
      crosses.push_back(c);
    } else {
      throw ParseError(line_no, kw.column, "unknown statement '" + std::string(kw.text) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header '1pd VERSION'");

  // Dense ids.
  std::size_t expected = 0;
  for (const auto& [id, where] : vertices) {
    if (id != expected++) {
      throw ParseError(where.first, where.second,
                       "vertex ids must be 0..n-1; missing id " + std::to_string(expected - 1));
    }
  }
  expected = 0;
  for (const auto& [id, e] : edges) {
    if (id != expected++) {
      throw ParseError(e.line, e.column_id, "edge ids must be 0..m-1; missing id " + std::to_string(expected - 1));
    }
  }

  ParsedDocument doc;
  SourceMap& src = doc.source;
  DrawingParts parts;
  parts.vertex_count = vertices.size();
  parts.mode = mode;
  parts.rotations.resize(vertices.size());
  src.rotation_line.assign(vertices.size(), 0);
  for (const auto& [id, where] : vertices) src.vertex_line.push_back(where.first);
  for (const auto& [id, e] : edges) {
    if (!vertices.count(e.u)) throw ParseError(e.line, e.column_u, "dangling reference to vertex " + std::to_string(e.u));
    if (!vertices.count(e.v)) throw ParseError(e.line, e.column_v, "dangling reference to vertex " + std::to_string(e.v));
    parts.edges.push_back(Edge{{e.u, e.v}});
    src.edge_line.push_back(e.line);
  }
  for (const auto& [v, rot] : rots) {
    if (!vertices.count(v)) {
      throw ParseError(rot.line, rot_vertex_column[v], "dangling reference to vertex " + std::to_string(v));
    }
    for (const auto& [h, column] : rot.halves) {
      if (!edges.count(h.edge)) {
        throw ParseError(rot.line, column, "dangling reference to edge " + std::to_string(h.edge));
      }
      parts.rotations[v].push_back(h);
    }
    src.rotation_line[v] = rot.line;
  }
  for (const auto& c : crosses) {
    if (!edges.count(c.a.edge)) throw ParseError(c.line, c.column_a, "dangling reference to edge " + std::to_string(c.a.edge));
    if (!edges.count(c.b.edge)) throw ParseError(c.line, c.column_b, "dangling reference to edge " + std::to_string(c.b.edge));
    parts.crossings.push_back({c.a, c.b});
  }
  doc.drawing = std::move(parts).build();
  // Map canonical records back to their lines.
  for (const auto& c : crosses) {
    src.crossing_line[CrossingRecord{c.a, c.b}.canonical()] = c.line;
  }
  return doc;
}

/// Attach source lines to validation violations.
inline std::vector<LocatedViolation> locate(const ValidationReport& report, const ParsedDocument& doc) {
  std::vector<LocatedViolation> out;
  const auto& src = doc.source;
  for (const Violation& v : report.violations) {
    std::optional<std::size_t> line;
    switch (v.subject.kind) {
      case Subject::Kind::vertex:
        if (v.subject.id < src.rotation_line.size() && src.rotation_line[v.subject.id] != 0) {
          line = src.rotation_line[v.subject.id];
        } else if (v.subject.id < src.vertex_line.size()) {
          line = src.vertex_line[v.subject.id];
        }
        break;
      case Subject::Kind::edge:
        if (v.subject.id < src.edge_line.size()) line = src.edge_line[v.subject.id];
        break;
      case Subject::Kind::crossing:
        if (v.subject.id < doc.drawing.crossing_count()) {
          const auto it = src.crossing_line.find(doc.drawing.crossings()[v.subject.id]);
          if (it != src.crossing_line.end()) line = it->second;
        }
        break;
      case Subject::Kind::none:
        break;
    }
    out.push_back({v, line});
  }
  return out;
}

/// Canonical text: ascending ids, rotations from their least half-edge,
/// crossing records normalised and sorted.
inline std::string serialize(const CombinatorialDrawing& d) {
  std::ostringstream out;
  out << "1pd " << kFormatVersion << '\n';
  out << "mode " << to_string(d.mode()) << '\n';
  for (VertexId v = 0; v < d.vertex_count(); ++v) out << "vertex " << v << '\n';
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    out << "edge " << e << ' ' << d.edges()[e].ends[0] << ' ' << d.edges()[e].ends[1] << '\n';
  }
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (d.rotation(v).empty()) continue;
    out << "rot " << v;
    for (const HalfEdge h : d.rotation(v)) out << ' ' << h.edge << '.' << int{h.end};
    out << '\n';
  }
  for (const CrossingRecord& c : d.crossings()) {
    out << "cross " << c.first.edge << '.' << int{c.first.end} << ' ' << c.second.edge << '.'
        << int{c.second.end} << '\n';
  }
  return out.str();
}

}  // namespace onep
