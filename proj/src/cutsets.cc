#include "scra/cutsets.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace scra {

Cutset::Cutset(std::vector<NodeId> events) : events_(std::move(events)) {
  if (events_.empty()) throw std::invalid_argument("cutset must not be empty");
  std::sort(events_.begin(), events_.end());
  events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
}

bool Cutset::IsSubsetOf(const Cutset& other) const {
  return std::includes(other.events_.begin(), other.events_.end(),
                       events_.begin(), events_.end());
}

std::string Cutset::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (i) out += ',';
    out += events_[i].str();
  }
  return out + "}";
}

std::strong_ordering Cutset::operator<=>(const Cutset& other) const {
  if (auto cmp = size() <=> other.size(); cmp != 0) return cmp;
  return events_ <=> other.events_;
}

CutsetCollection CutsetCollection::FromMinimalFamily(
    std::vector<Cutset> cutsets) {
  std::sort(cutsets.begin(), cutsets.end());
  for (std::size_t i = 0; i < cutsets.size(); ++i) {
    for (std::size_t j = i + 1; j < cutsets.size(); ++j) {
      if (cutsets[i].IsSubsetOf(cutsets[j]))
        throw std::invalid_argument("cutset family is not minimal: " +
                                    cutsets[i].ToString() + " within " +
                                    cutsets[j].ToString());
    }
  }
  return CutsetCollection(std::move(cutsets));
}

bool CutsetCollection::Contains(const Cutset& cutset) const {
  return std::binary_search(cutsets_.begin(), cutsets_.end(), cutset);
}

CutsetCollection Minimize(std::vector<Cutset> cutsets) {
  std::sort(cutsets.begin(), cutsets.end());
  cutsets.erase(std::unique(cutsets.begin(), cutsets.end()), cutsets.end());
  std::vector<Cutset> kept;
  for (Cutset& candidate : cutsets) {
    // Canonical order puts every possible subset before the candidate.
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Cutset& k) {
      return k.size() < candidate.size() && k.IsSubsetOf(candidate);
    });
    if (!absorbed) kept.push_back(std::move(candidate));
  }
  return CutsetCollection(std::move(kept));
}

namespace {

using Item = std::uint32_t;
using Row = std::vector<Item>;  // Sorted, unique.

/// Items [0, events.size()) are events; the rest are gates.
struct Table {
  std::vector<NodeId> events;
  std::vector<LogicKind> logic;            // Per gate.
  std::vector<std::vector<Item>> inputs;   // Per gate.
  Item top = 0;

  bool is_gate(Item item) const { return item >= events.size(); }
  std::size_t gate(Item item) const { return item - events.size(); }
};

Table Index(const ExpandedGraph& g) {
  Table t;
  std::map<std::string, Item> ids;
  for (const auto& [id, event] : g.events()) {
    ids.emplace(id.str(), static_cast<Item>(t.events.size()));
    t.events.push_back(id);
  }
  for (const auto& [id, gate] : g.gates()) {
    ids.emplace(id, static_cast<Item>(t.events.size() + t.logic.size()));
    t.logic.push_back(gate.logic);
  }
  t.inputs.resize(t.logic.size());
  for (const auto& [id, gate] : g.gates()) {
    auto& in = t.inputs[t.gate(ids.at(id))];
    for (const std::string& input : gate.inputs) {
      auto it = ids.find(input);
      if (it == ids.end())
        throw Error(ErrorCode::kUnknownInput,
                    "gate '" + id + "' has unknown input '" + input + "'");
      in.push_back(it->second);
    }
  }
  auto top = ids.find(g.top());
  if (top == ids.end() || !t.is_gate(top->second))
    throw Error(ErrorCode::kUnknownInput, "top gate '" + g.top() + "' not found");
  t.top = top->second;
  return t;
}

void CheckAcyclic(const Table& t) {
  enum Mark : char { kNone, kActive, kDone };
  std::vector<Mark> mark(t.logic.size(), kNone);
  auto visit = [&](auto&& self, Item item) -> void {
    if (!t.is_gate(item)) return;
    Mark& m = mark[t.gate(item)];
    if (m == kDone) return;
    if (m == kActive) throw Error(ErrorCode::kGateCycle, "gate graph is cyclic");
    m = kActive;
    for (Item in : t.inputs[t.gate(item)]) self(self, in);
    mark[t.gate(item)] = kDone;
  };
  visit(visit, t.top);
}

Row Substitute(const Row& row, Item gate, const std::vector<Item>& with) {
  Row out;
  out.reserve(row.size() + with.size());
  for (Item i : row) {
    if (i != gate) out.push_back(i);
  }
  out.insert(out.end(), with.begin(), with.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CutsetCollection Mocus(const ExpandedGraph& g) {
  Table t = Index(g);
  CheckAcyclic(t);

  std::set<Row> finished;
  std::vector<Row> work{{t.top}};
  while (!work.empty()) {
    Row row = std::move(work.back());
    work.pop_back();
    // Gates sort after events, so a gate, if any, is last.
    if (row.empty() || !t.is_gate(row.back())) {
      if (!row.empty()) finished.insert(std::move(row));
      continue;
    }
    Item gate = row.back();
    const std::vector<Item>& inputs = t.inputs[t.gate(gate)];
    if (inputs.empty()) continue;  // An empty gate never fails.
    if (t.logic[t.gate(gate)] == LogicKind::kAnd) {
      work.push_back(Substitute(row, gate, inputs));
    } else {
      for (Item in : inputs) work.push_back(Substitute(row, gate, {in}));
    }
  }

  std::vector<Cutset> cutsets;
  cutsets.reserve(finished.size());
  for (const Row& row : finished) {
    std::vector<NodeId> events;
    for (Item i : row) events.push_back(t.events[i]);
    cutsets.emplace_back(std::move(events));
  }
  return Minimize(std::move(cutsets));
}

}  // namespace scra
