/// @file graph_format.h
/// Line-oriented text format for system graphs.
///
///     # comment
///     node a component logic=and r=0.05
///     node s1 supplier r=0.01
///     edge s1 -> a
///     indicators a b logic=or
///
/// One statement per line; tokens are separated by whitespace; '#' starts a
/// comment. `logic=` defaults to `or` on components. Probabilities are plain
/// decimal literals in [0, 1]. Nodes may be referenced before they are
/// declared. Exactly one `indicators` line is required.

#ifndef SCRA_GRAPH_FORMAT_H_
#define SCRA_GRAPH_FORMAT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scra/graph.h"

namespace scra {

/// 1-based line and byte column.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourcePos&) const = default;
};

enum class NodeKind { kComponent, kSupplier };

struct NodeDecl {
  NodeId id;
  NodeKind kind = NodeKind::kComponent;
  LogicKind logic = LogicKind::kOr;
  bool logic_explicit = false;
  Probability prob;
  SourcePos pos;
  SourcePos id_pos;
};

struct EdgeDecl {
  NodeId src;
  NodeId dst;
  SourcePos pos;
  SourcePos src_pos;
  SourcePos dst_pos;
};

struct IndicatorsDecl {
  std::vector<NodeId> ids;
  std::vector<SourcePos> id_pos;
  LogicKind logic = LogicKind::kOr;
  SourcePos pos;
};

using Statement = std::variant<NodeDecl, EdgeDecl, IndicatorsDecl>;

struct GraphDocument {
  std::optional<std::string> name;
  std::vector<Statement> statements;
  std::vector<std::string> lines;  ///< Source text, for diagnostics.
};

/// Syntax pass only; references are not resolved.
/// @throws ParseError
GraphDocument ParseDocument(std::string_view text,
                            std::optional<std::string> name = std::nullopt);

/// Resolves references and validates. Violations are reported as a
/// ParseError whose code() is the broken rule, positioned at the statement
/// that breaks it.
/// @throws ParseError
SystemGraph ToGraph(const GraphDocument& doc);

/// ParseDocument followed by ToGraph.
SystemGraph ParseGraph(std::string_view text);

/// Canonical text: nodes sorted by id, then edges, then indicators.
std::string SerializeGraph(const SystemGraph& graph);

/// Statements in document order, one canonical line each.
std::string SerializeDocument(const GraphDocument& doc);

/// Shortest fixed-notation decimal that reads back to the same value.
std::string FormatProbability(double value);

}  // namespace scra

#endif  // SCRA_GRAPH_FORMAT_H_
