#include "scra/expand.h"

#include <algorithm>

namespace scra {

std::string ModuleGateId(const NodeId& component) {
  return "module:" + component.str();
}

std::string DependencyGateId(const NodeId& component) {
  return "deps:" + component.str();
}

ExpandedGraph::ExpandedGraph(std::string top, std::map<std::string, Gate> gates,
                             std::map<NodeId, BasicEvent> events)
    : top_(std::move(top)), gates_(std::move(gates)), events_(std::move(events)) {}

bool ExpandedGraph::is_event(const std::string& id) const {
  if (!NodeId::IsValid(id)) return false;
  return events_.count(NodeId(id)) != 0;
}

ProbabilityMap ExpandedGraph::probabilities() const {
  ProbabilityMap probs;
  for (const auto& [id, event] : events_) probs.emplace(id, event.prob);
  return probs;
}

ExpandedGraph Expand(const SystemGraph& graph) {
  std::set<NodeId> live = NodesReachingIndicators(graph.parts());

  std::map<std::string, Gate> gates;
  std::map<NodeId, BasicEvent> events;

  for (const auto& [id, component] : graph.components()) {
    if (!live.count(id)) continue;
    Gate module{LogicKind::kOr, {}};

    events.emplace(id, BasicEvent{id, EventKind::kComponentLocal,
                                  component.local_prob});
    module.inputs.push_back(id.str());

    if (std::optional<NodeId> supplier = graph.supplier_of(id)) {
      events.emplace(*supplier,
                     BasicEvent{*supplier, EventKind::kSupplier,
                                graph.suppliers().at(*supplier).prob});
      module.inputs.push_back(supplier->str());
    }

    std::vector<NodeId> preds = graph.component_predecessors(id);
    if (!preds.empty()) {
      Gate deps{component.logic, {}};
      for (const NodeId& p : preds) deps.inputs.push_back(ModuleGateId(p));
      std::sort(deps.inputs.begin(), deps.inputs.end());
      gates.emplace(DependencyGateId(id), std::move(deps));
      module.inputs.push_back(DependencyGateId(id));
    }

    std::sort(module.inputs.begin(), module.inputs.end());
    gates.emplace(ModuleGateId(id), std::move(module));
  }

  Gate top{graph.indicator_logic(), {}};
  for (const NodeId& id : graph.indicators()) top.inputs.push_back(ModuleGateId(id));
  std::sort(top.inputs.begin(), top.inputs.end());
  gates.emplace(kTopGateId, std::move(top));

  return ExpandedGraph(kTopGateId, std::move(gates), std::move(events));
}

}  // namespace scra
