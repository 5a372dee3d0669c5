#pragma once

// GAF ("geometric amalgamation format") text I/O plus DOT and JSON export.
//
//   # gaf 1                              optional version comment
//   axis <name>
//   chamber <name> rank=<int> orientable=<yes|no>
//   edge <axis-name> <chamber-name>
//
// One statement per line, names match [A-Za-z0-9_]+, '#' starts a comment.
// Declarations may come in any order; repeated edge lines are multi-edges.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gaf/diagram.hpp"

namespace gaf {

struct AxisDecl {
  std::string name;
  std::size_t name_column = 0;
};

struct ChamberDecl {
  std::string name;
  ChamberData data;
  std::size_t name_column = 0;
};

struct EdgeDecl {
  std::string axis;
  std::string chamber;
  std::size_t axis_column = 0;
  std::size_t chamber_column = 0;
};

struct Comment {
  std::string text;
};

struct Statement {
  std::size_t line = 0;
  std::variant<AxisDecl, ChamberDecl, EdgeDecl, Comment> body;
};

/// Statements in source order; blank lines are dropped.
struct GafDocument {
  std::vector<Statement> statements;
};

bool is_identifier(std::string_view name);

/// Syntax only. Throws ParseError with 1-based line and column.
GafDocument parse_gaf_document(std::string_view text);

/// Resolves names; throws ParseError on duplicates and undeclared names.
Diagram to_diagram(const GafDocument& doc);

Diagram parse_gaf(std::string_view text);

/// Deterministic: axes sorted by name, then chambers, then edges sorted
/// lexicographically by (axis, chamber). Throws PreconditionError for names
/// that are not identifiers.
std::string print_gaf(const Diagram& d);

/// Graphviz digraph: axes as circles, chambers as boxes labeled
/// "<name>\n<rank>,<or|non>", one edge statement per diagram edge.
std::string export_dot(const Diagram& d);

/// {"axes": [...], "chambers": [{"name","rank","orientable"}...],
///  "edges": [{"axis","chamber"}...]} in storage order, keys sorted.
std::string export_json(const Diagram& d);

/// Inverse of export_json. Throws ParseError on malformed input.
Diagram import_json(std::string_view text);

}  // namespace gaf
