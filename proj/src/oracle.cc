#include "scra/oracle.h"

#include <cstdint>
#include <string>
#include <vector>

namespace scra {

namespace {

/// Gate graph flattened to indices: events first, gates in evaluation order.
struct Circuit {
  std::vector<NodeId> events;
  struct Node {
    LogicKind logic;
    std::vector<std::size_t> inputs;  ///< Indices into the value array.
  };
  std::vector<Node> gates;  ///< gates[k] stores into value[events.size() + k].
  std::size_t top = 0;
};

Circuit Compile(const ExpandedGraph& g) {
  Circuit c;
  std::map<std::string, std::size_t> index;
  for (const auto& [id, event] : g.events()) {
    index.emplace(id.str(), c.events.size());
    c.events.push_back(id);
  }

  enum Mark { kNone, kActive, kDone };
  std::map<std::string, Mark> mark;
  auto visit = [&](auto&& self, const std::string& id) -> std::size_t {
    if (auto it = index.find(id); it != index.end()) return it->second;
    auto gate = g.gates().find(id);
    if (gate == g.gates().end())
      throw Error(ErrorCode::kUnknownInput, "unknown gate input '" + id + "'");
    if (mark[id] == kActive)
      throw Error(ErrorCode::kGateCycle, "gate cycle through '" + id + "'");
    mark[id] = kActive;
    Circuit::Node node{gate->second.logic, {}};
    for (const std::string& in : gate->second.inputs)
      node.inputs.push_back(self(self, in));
    mark[id] = kDone;
    std::size_t slot = c.events.size() + c.gates.size();
    c.gates.push_back(std::move(node));
    index.emplace(id, slot);
    return slot;
  };
  c.top = visit(visit, g.top());
  return c;
}

/// Empty gates evaluate as secure.
bool Fails(const Circuit& c, const std::vector<char>& event_failed,
           std::vector<char>& value) {
  std::size_t n = c.events.size();
  for (std::size_t i = 0; i < n; ++i) value[i] = event_failed[i];
  for (std::size_t k = 0; k < c.gates.size(); ++k) {
    const Circuit::Node& gate = c.gates[k];
    bool result;
    if (gate.inputs.empty()) {
      result = false;
    } else if (gate.logic == LogicKind::kOr) {
      result = false;
      for (std::size_t in : gate.inputs) result = result || value[in];
    } else {
      result = true;
      for (std::size_t in : gate.inputs) result = result && value[in];
    }
    value[n + k] = result;
  }
  return value[c.top];
}

void CheckSize(const Circuit& c) {
  if (c.events.size() > kMaxOracleEvents)
    throw Error(ErrorCode::kTooManyEvents,
                std::to_string(c.events.size()) +
                    " basic events exceed the exhaustive limit of " +
                    std::to_string(kMaxOracleEvents));
}

/// failing[mask] for every assignment; bit i set means event i failed.
std::vector<char> FailingTable(const Circuit& c) {
  std::size_t n = c.events.size();
  std::vector<char> failing(std::size_t{1} << n);
  std::vector<char> event_failed(n);
  std::vector<char> value(n + c.gates.size());
  for (std::uint32_t mask = 0; mask < failing.size(); ++mask) {
    for (std::size_t i = 0; i < n; ++i) event_failed[i] = (mask >> i) & 1u;
    failing[mask] = Fails(c, event_failed, value);
  }
  return failing;
}

}  // namespace

EventState EvaluateStructure(const ExpandedGraph& g, const AssignmentVector& a) {
  Circuit c = Compile(g);
  std::vector<char> event_failed;
  for (const NodeId& id : c.events) {
    auto it = a.find(id);
    if (it == a.end())
      throw Error(ErrorCode::kIncompleteAssignment,
                  "no state assigned to event '" + id.str() + "'");
    event_failed.push_back(it->second == EventState::kFailed);
  }
  std::vector<char> value(c.events.size() + c.gates.size());
  return Fails(c, event_failed, value) ? EventState::kFailed
                                       : EventState::kSecure;
}

CutsetCollection BruteCutsets(const ExpandedGraph& g) {
  Circuit c = Compile(g);
  CheckSize(c);
  std::vector<char> failing = FailingTable(c);
  std::size_t n = c.events.size();

  std::vector<Cutset> minimal;
  for (std::uint32_t mask = 1; mask < failing.size(); ++mask) {
    if (!failing[mask]) continue;
    bool is_minimal = true;
    for (std::size_t i = 0; i < n && is_minimal; ++i) {
      if ((mask >> i) & 1u) is_minimal = !failing[mask ^ (1u << i)];
    }
    if (!is_minimal) continue;
    std::vector<NodeId> events;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) events.push_back(c.events[i]);
    }
    minimal.emplace_back(std::move(events));
  }
  return CutsetCollection::FromMinimalFamily(std::move(minimal));
}

double ExactProbability(const ExpandedGraph& g, const ProbabilityMap& probs) {
  Circuit c = Compile(g);
  CheckSize(c);
  std::vector<double> p;
  for (const NodeId& id : c.events) {
    auto it = probs.find(id);
    if (it == probs.end())
      throw Error(ErrorCode::kMissingProbability,
                  "no probability for event '" + id.str() + "'");
    p.push_back(it->second.value());
  }
  std::vector<char> failing = FailingTable(c);
  double total = 0;
  for (std::uint32_t mask = 0; mask < failing.size(); ++mask) {
    if (!failing[mask]) continue;
    double term = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
      term *= ((mask >> i) & 1u) ? p[i] : 1 - p[i];
    total += term;
  }
  return total;
}

}  // namespace scra
