/// @file expand.h
/// Failure-module expansion of a system graph into an AND/OR gate graph.
///
/// Each component `c` becomes an OR module root over up to three inputs:
/// the local event `c`, the event of its supplier, and a dependency gate
/// carrying the component's own logic over the module roots of its
/// component predecessors. A virtual top gate combines the indicator
/// modules with the indicator logic and has no event of its own.

#ifndef SCRA_EXPAND_H_
#define SCRA_EXPAND_H_

#include <map>
#include <string>
#include <vector>

#include "scra/graph.h"

namespace scra {

enum class EventKind { kComponentLocal, kSupplier };

struct BasicEvent {
  NodeId id;
  EventKind kind = EventKind::kComponentLocal;
  Probability prob;

  bool operator==(const BasicEvent&) const = default;
};

/// Inputs are gate ids or event ids. Gate ids contain a ':' and therefore
/// never collide with node ids.
struct Gate {
  LogicKind logic = LogicKind::kOr;
  std::vector<std::string> inputs;

  bool operator==(const Gate&) const = default;
};

inline const std::string kTopGateId = "top:";
std::string ModuleGateId(const NodeId& component);
std::string DependencyGateId(const NodeId& component);

class ExpandedGraph {
 public:
  ExpandedGraph(std::string top, std::map<std::string, Gate> gates,
                std::map<NodeId, BasicEvent> events);

  const std::string& top() const { return top_; }
  const std::map<std::string, Gate>& gates() const { return gates_; }
  const std::map<NodeId, BasicEvent>& events() const { return events_; }

  bool is_gate(const std::string& id) const { return gates_.count(id) != 0; }
  bool is_event(const std::string& id) const;

  ProbabilityMap probabilities() const;

  bool operator==(const ExpandedGraph&) const = default;

 private:
  std::string top_;
  std::map<std::string, Gate> gates_;
  std::map<NodeId, BasicEvent> events_;
};

/// Expands the components that reach an indicator; others are dropped.
/// Gate inputs are sorted by id.
ExpandedGraph Expand(const SystemGraph& graph);

}  // namespace scra

#endif  // SCRA_EXPAND_H_
