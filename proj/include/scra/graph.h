/// @file graph.h
/// System graph of components and suppliers with AND/OR dependency logic.
///
/// A graph is immutable once built. Every SystemGraph in existence satisfies
/// the structural rules checked by Validate(); the only way to obtain one is
/// BuildGraph(), which throws ValidationError otherwise.

#ifndef SCRA_GRAPH_H_
#define SCRA_GRAPH_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scra/error.h"

namespace scra {

/// Node identifier: [A-Za-z_][A-Za-z0-9_]*, case-sensitive.
class NodeId {
 public:
  /// @throws Error(kInvalidId) if the text is not a well-formed identifier.
  explicit NodeId(std::string text);
  NodeId(const char* text) : NodeId(std::string(text)) {}  // NOLINT

  const std::string& str() const { return text_; }

  static bool IsValid(std::string_view text);

  auto operator<=>(const NodeId&) const = default;
  bool operator==(const NodeId&) const = default;

 private:
  std::string text_;
};

/// Likelihood in [0, 1].
class Probability {
 public:
  /// @throws Error(kProbabilityOutOfRange) for values outside [0, 1] or NaN.
  explicit Probability(double value);
  Probability() = default;

  double value() const { return value_; }

  auto operator<=>(const Probability&) const = default;
  bool operator==(const Probability&) const = default;

 private:
  double value_ = 0;
};

using ProbabilityMap = std::map<NodeId, Probability>;

enum class LogicKind { kAnd, kOr };

std::string_view ToString(LogicKind logic);
inline LogicKind Opposite(LogicKind logic) {
  return logic == LogicKind::kAnd ? LogicKind::kOr : LogicKind::kAnd;
}

struct ComponentNode {
  NodeId id;
  LogicKind logic = LogicKind::kOr;
  Probability local_prob;  ///< Direct compromise likelihood of the component.

  bool operator==(const ComponentNode&) const = default;
};

struct SupplierNode {
  NodeId id;
  Probability prob;

  bool operator==(const SupplierNode&) const = default;
};

/// Security dependency: the security of `dst` requires that of `src`.
struct Edge {
  NodeId src;
  NodeId dst;

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

/// Unvalidated constituents of a graph, in caller order.
struct GraphParts {
  std::vector<ComponentNode> components;
  std::vector<SupplierNode> suppliers;
  std::vector<Edge> edges;
  std::vector<NodeId> indicators;
  LogicKind indicator_logic = LogicKind::kOr;
};

class SystemGraph {
 public:
  const std::map<NodeId, ComponentNode>& components() const {
    return components_;
  }
  const std::map<NodeId, SupplierNode>& suppliers() const { return suppliers_; }
  const std::set<Edge>& edges() const { return edges_; }
  const std::set<NodeId>& indicators() const { return indicators_; }
  LogicKind indicator_logic() const { return indicator_logic_; }

  bool contains(const NodeId& id) const {
    return is_component(id) || is_supplier(id);
  }
  bool is_component(const NodeId& id) const {
    return components_.count(id) != 0;
  }
  bool is_supplier(const NodeId& id) const { return suppliers_.count(id) != 0; }
  std::size_t node_count() const {
    return components_.size() + suppliers_.size();
  }

  /// Supplier feeding the component, if any.
  std::optional<NodeId> supplier_of(const NodeId& component) const;

  /// Component sources of edges into `component`, sorted by id.
  std::vector<NodeId> component_predecessors(const NodeId& component) const;

  /// Probability of every node, keyed by id.
  ProbabilityMap probabilities() const;

  /// Sorted constituents; BuildGraph(parts()) reproduces *this.
  GraphParts parts() const;

  bool operator==(const SystemGraph&) const = default;

 private:
  friend SystemGraph BuildGraph(GraphParts parts);
  SystemGraph() = default;

  std::map<NodeId, ComponentNode> components_;
  std::map<NodeId, SupplierNode> suppliers_;
  std::set<Edge> edges_;
  std::set<NodeId> indicators_;
  LogicKind indicator_logic_ = LogicKind::kOr;
};

/// Checks every structural rule and reports each broken one.
///
/// Duplicate edges and duplicate indicator ids collapse (set semantics).
/// Nodes without a directed path to an indicator yield warnings.
std::vector<Violation> Validate(const GraphParts& parts);
std::vector<Violation> Validate(const SystemGraph& graph);

/// @throws ValidationError if any error-severity violation exists.
SystemGraph BuildGraph(GraphParts parts);

SystemGraph BuildGraph(std::vector<ComponentNode> components,
                       std::vector<SupplierNode> suppliers,
                       std::vector<Edge> edges, std::vector<NodeId> indicators,
                       LogicKind indicator_logic);

/// Declared nodes that have a directed path (over edges between declared
/// nodes) to a declared indicator component, indicators included.
std::set<NodeId> NodesReachingIndicators(const GraphParts& parts);

}  // namespace scra

#endif  // SCRA_GRAPH_H_
