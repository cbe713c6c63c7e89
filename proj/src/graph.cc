#include "scra/graph.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <utility>

namespace scra {

NodeId::NodeId(std::string text) : text_(std::move(text)) {
  if (!IsValid(text_))
    throw Error(ErrorCode::kInvalidId, "invalid node id '" + text_ + "'");
}

bool NodeId::IsValid(std::string_view text) {
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.empty() || !alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [&](char c) { return alpha(c) || digit(c); });
}

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw Error(ErrorCode::kProbabilityOutOfRange,
                "probability " + std::to_string(value) + " is outside [0, 1]");
}

std::string_view ToString(LogicKind logic) {
  return logic == LogicKind::kAnd ? "and" : "or";
}

std::optional<NodeId> SystemGraph::supplier_of(const NodeId& component) const {
  for (const Edge& e : edges_) {
    if (e.dst == component && is_supplier(e.src)) return e.src;
  }
  return std::nullopt;
}

std::vector<NodeId> SystemGraph::component_predecessors(
    const NodeId& component) const {
  std::vector<NodeId> preds;
  for (const Edge& e : edges_) {
    if (e.dst == component && is_component(e.src)) preds.push_back(e.src);
  }
  return preds;  // std::set<Edge> order keeps these sorted by src.
}

ProbabilityMap SystemGraph::probabilities() const {
  ProbabilityMap probs;
  for (const auto& [id, c] : components_) probs.emplace(id, c.local_prob);
  for (const auto& [id, s] : suppliers_) probs.emplace(id, s.prob);
  return probs;
}

GraphParts SystemGraph::parts() const {
  GraphParts parts;
  for (const auto& [id, c] : components_) parts.components.push_back(c);
  for (const auto& [id, s] : suppliers_) parts.suppliers.push_back(s);
  parts.edges.assign(edges_.begin(), edges_.end());
  parts.indicators.assign(indicators_.begin(), indicators_.end());
  parts.indicator_logic = indicator_logic_;
  return parts;
}

namespace {

enum class Kind { kComponent, kSupplier };

/// First declaration wins for the kind lookup; duplicates are reported.
std::map<NodeId, Kind> Declarations(const GraphParts& parts) {
  std::map<NodeId, Kind> kinds;
  for (const auto& c : parts.components) kinds.emplace(c.id, Kind::kComponent);
  for (const auto& s : parts.suppliers) kinds.emplace(s.id, Kind::kSupplier);
  return kinds;
}

/// Finds one cycle among component edges; empty if acyclic.
/// The returned sequence starts at its smallest id.
std::vector<NodeId> FindCycle(const std::map<NodeId, Kind>& kinds,
                              const std::set<Edge>& edges) {
  std::map<NodeId, std::vector<NodeId>> succ;
  for (const Edge& e : edges) {
    auto s = kinds.find(e.src);
    auto d = kinds.find(e.dst);
    if (s == kinds.end() || d == kinds.end()) continue;
    if (s->second != Kind::kComponent || d->second != Kind::kComponent)
      continue;
    succ[e.src].push_back(e.dst);
  }
  enum Color { kWhite, kGrey, kBlack };
  std::map<NodeId, Color> color;
  std::vector<NodeId> stack;
  std::vector<NodeId> cycle;

  auto dfs = [&](auto&& self, const NodeId& node) -> bool {
    color[node] = kGrey;
    stack.push_back(node);
    for (const NodeId& next : succ[node]) {
      Color c = color[next];
      if (c == kGrey) {
        auto it = std::find(stack.begin(), stack.end(), next);
        cycle.assign(it, stack.end());
        return true;
      }
      if (c == kWhite && self(self, next)) return true;
    }
    stack.pop_back();
    color[node] = kBlack;
    return false;
  };
  for (const auto& [id, kind] : kinds) {
    if (kind != Kind::kComponent || color[id] != kWhite) continue;
    if (dfs(dfs, id)) break;
  }
  if (!cycle.empty()) {
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                cycle.end());
  }
  return cycle;
}

std::string Join(const std::vector<NodeId>& ids, std::string_view sep) {
  std::string out;
  for (const NodeId& id : ids) {
    if (!out.empty()) out += sep;
    out += id.str();
  }
  return out;
}

}  // namespace

std::set<NodeId> NodesReachingIndicators(const GraphParts& parts) {
  auto kinds = Declarations(parts);
  std::map<NodeId, std::vector<NodeId>> pred;
  for (const Edge& e : parts.edges) {
    if (kinds.count(e.src) && kinds.count(e.dst)) pred[e.dst].push_back(e.src);
  }
  std::set<NodeId> seen;
  std::deque<NodeId> queue;
  for (const NodeId& id : parts.indicators) {
    auto it = kinds.find(id);
    if (it == kinds.end() || it->second != Kind::kComponent) continue;
    if (seen.insert(id).second) queue.push_back(id);
  }
  while (!queue.empty()) {
    NodeId node = queue.front();
    queue.pop_front();
    for (const NodeId& p : pred[node]) {
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

std::vector<Violation> Validate(const GraphParts& parts) {
  std::vector<Violation> out;
  auto error = [&](ErrorCode rule, std::vector<NodeId> ids, std::string msg) {
    std::vector<std::string> names;
    for (auto& id : ids) names.push_back(id.str());
    out.push_back({rule, Severity::kError, std::move(names), std::move(msg)});
  };

  std::set<NodeId> declared;
  auto declare = [&](const NodeId& id) {
    if (!declared.insert(id).second)
      error(ErrorCode::kDuplicateNodeId, {id},
            "node '" + id.str() + "' is declared more than once");
  };
  for (const auto& c : parts.components) declare(c.id);
  for (const auto& s : parts.suppliers) declare(s.id);

  auto kinds = Declarations(parts);
  auto kind_of = [&](const NodeId& id) -> std::optional<Kind> {
    auto it = kinds.find(id);
    if (it == kinds.end()) return std::nullopt;
    return it->second;
  };

  std::set<Edge> edges;
  std::vector<Edge> unique_edges;
  for (const Edge& e : parts.edges) {
    if (edges.insert(e).second) unique_edges.push_back(e);
  }

  for (const Edge& e : unique_edges) {
    for (const NodeId* end : {&e.src, &e.dst}) {
      if (!kind_of(*end))
        error(ErrorCode::kUnknownEndpoint, {e.src, e.dst},
              "edge " + e.src.str() + " -> " + e.dst.str() +
                  " references undeclared node '" + end->str() + "'");
    }
  }
  for (const NodeId& id : parts.indicators) {
    if (!kind_of(id))
      error(ErrorCode::kUnknownEndpoint, {id},
            "indicator '" + id.str() + "' is not a declared node");
  }

  std::map<NodeId, std::vector<NodeId>> suppliers_of;
  for (const Edge& e : unique_edges) {
    auto src = kind_of(e.src);
    auto dst = kind_of(e.dst);
    if (!src || !dst) continue;
    if (*dst == Kind::kSupplier) {
      error(ErrorCode::kIllegalEdgeKind, {e.src, e.dst},
            "edge " + e.src.str() + " -> " + e.dst.str() +
                " targets a supplier; only component and supplier nodes may "
                "feed components");
    } else if (*src == Kind::kSupplier) {
      suppliers_of[e.dst].push_back(e.src);
    }
  }
  for (const auto& [component, suppliers] : suppliers_of) {
    if (suppliers.size() > 1) {
      std::vector<NodeId> ids{component};
      ids.insert(ids.end(), suppliers.begin(), suppliers.end());
      error(ErrorCode::kMultipleSuppliers, ids,
            "component '" + component.str() + "' has " +
                std::to_string(suppliers.size()) + " suppliers (" +
                Join(suppliers, ", ") + ")");
    }
  }

  std::vector<NodeId> cycle = FindCycle(kinds, edges);
  if (!cycle.empty()) {
    std::vector<NodeId> loop = cycle;
    loop.push_back(cycle.front());
    error(ErrorCode::kCycleDetected, cycle,
          "dependency cycle " + Join(loop, " -> "));
  }

  if (parts.indicators.empty()) {
    error(ErrorCode::kEmptyIndicators, {}, "indicator set is empty");
  }
  for (const NodeId& id : parts.indicators) {
    if (kind_of(id) == Kind::kSupplier)
      error(ErrorCode::kNotAComponent, {id},
            "indicator '" + id.str() + "' is a supplier, not a component");
  }

  // Warnings only make sense once the node set is unambiguous.
  bool has_errors = !out.empty();
  if (!has_errors) {
    std::set<NodeId> live = NodesReachingIndicators(parts);
    for (const auto& [id, kind] : kinds) {
      if (live.count(id)) continue;
      out.push_back({ErrorCode::kUnreachableNode,
                     Severity::kWarning,
                     {id.str()},
                     std::string(kind == Kind::kComponent ? "component"
                                                          : "supplier") +
                         " '" + id.str() +
                         "' has no path to any indicator and is ignored"});
    }
  }
  return out;
}

std::vector<Violation> Validate(const SystemGraph& graph) {
  return Validate(graph.parts());
}

SystemGraph BuildGraph(GraphParts parts) {
  std::vector<Violation> violations = Validate(parts);
  bool fatal = std::any_of(violations.begin(), violations.end(), [](auto& v) {
    return v.severity == Severity::kError;
  });
  if (fatal) throw ValidationError(std::move(violations));

  SystemGraph graph;
  for (auto& c : parts.components) graph.components_.emplace(c.id, c);
  for (auto& s : parts.suppliers) graph.suppliers_.emplace(s.id, s);
  graph.edges_.insert(parts.edges.begin(), parts.edges.end());
  graph.indicators_.insert(parts.indicators.begin(), parts.indicators.end());
  graph.indicator_logic_ = parts.indicator_logic;
  return graph;
}

SystemGraph BuildGraph(std::vector<ComponentNode> components,
                       std::vector<SupplierNode> suppliers,
                       std::vector<Edge> edges, std::vector<NodeId> indicators,
                       LogicKind indicator_logic) {
  return BuildGraph(GraphParts{std::move(components), std::move(suppliers),
                               std::move(edges), std::move(indicators),
                               indicator_logic});
}

}  // namespace scra
