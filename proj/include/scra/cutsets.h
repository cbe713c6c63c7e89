/// @file cutsets.h
/// Minimal cutsets and their extraction with MOCUS.

#ifndef SCRA_CUTSETS_H_
#define SCRA_CUTSETS_H_

#include <compare>
#include <string>
#include <vector>

#include "scra/expand.h"
#include "scra/graph.h"

namespace scra {

/// Non-empty set of basic events, stored sorted by id.
class Cutset {
 public:
  /// Sorts and deduplicates. @throws std::invalid_argument if empty.
  explicit Cutset(std::vector<NodeId> events);
  Cutset(std::initializer_list<NodeId> events)
      : Cutset(std::vector<NodeId>(events)) {}

  const std::vector<NodeId>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool IsSubsetOf(const Cutset& other) const;

  /// "{a,b,c}"
  std::string ToString() const;

  bool operator==(const Cutset&) const = default;
  /// Canonical order: ascending size, then lexicographic by id.
  std::strong_ordering operator<=>(const Cutset& other) const;

 private:
  std::vector<NodeId> events_;
};

/// Minimal family of cutsets in canonical order.
class CutsetCollection {
 public:
  CutsetCollection() = default;

  /// Wraps a family that is already minimal, reordering it canonically.
  /// @throws std::invalid_argument on duplicates or subset pairs.
  static CutsetCollection FromMinimalFamily(std::vector<Cutset> cutsets);

  const std::vector<Cutset>& cutsets() const { return cutsets_; }
  std::size_t size() const { return cutsets_.size(); }
  bool empty() const { return cutsets_.empty(); }
  auto begin() const { return cutsets_.begin(); }
  auto end() const { return cutsets_.end(); }
  bool Contains(const Cutset& cutset) const;

  bool operator==(const CutsetCollection&) const = default;

 private:
  explicit CutsetCollection(std::vector<Cutset> sorted)
      : cutsets_(std::move(sorted)) {}
  friend CutsetCollection Minimize(std::vector<Cutset> cutsets);

  std::vector<Cutset> cutsets_;
};

/// Removes duplicates and every proper superset of another member.
CutsetCollection Minimize(std::vector<Cutset> cutsets);

/// Minimal cutsets of the structure function rooted at g.top().
///
/// Top-down substitution: an OR gate splits its row into one row per input,
/// an AND gate is replaced in place by all its inputs. Rows are sets, so
/// repeated events collapse; absorption runs once over the final rows.
///
/// @throws Error(kGateCycle) if the gate graph is cyclic.
/// @throws Error(kUnknownInput) if an input names neither gate nor event.
CutsetCollection Mocus(const ExpandedGraph& g);

}  // namespace scra

#endif  // SCRA_CUTSETS_H_
