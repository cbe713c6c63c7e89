/// @file perturb.h
/// Structural and parametric perturbations of a system graph, and the
/// comparisons and sweeps built on them.
///
/// Every perturbation returns a new graph and leaves its input untouched.
/// Sweeps apply one perturbation at a time to the pristine baseline.

#ifndef SCRA_PERTURB_H_
#define SCRA_PERTURB_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scra/analysis.h"
#include "scra/graph.h"

namespace scra {

/// Toggles AND <-> OR on one component.
/// @throws Error(kUnknownNode), Error(kNotAComponent)
SystemGraph FlipLogic(const SystemGraph& g, const NodeId& node);

/// Removes a component with its edges, then every node left without a
/// directed path to an indicator. An omitted indicator leaves the indicator
/// set.
/// @throws Error(kUnknownNode), Error(kNotAComponent), Error(kLastIndicator)
SystemGraph OmitNode(const SystemGraph& g, const NodeId& node);

/// Replaces edge (src, old_dst) by (src, new_dst).
/// @throws Error(kUnknownEdge), Error(kUnknownEndpoint),
///     Error(kIllegalEdgeKind), Error(kWouldCreateCycle),
///     Error(kDuplicateEdge), Error(kMultipleSuppliers)
SystemGraph RewireEdge(const SystemGraph& g, const NodeId& src,
                       const NodeId& old_dst, const NodeId& new_dst);

/// Scales every node probability r to min(1, r * (1 + margin)).
/// @throws Error(kMarginOutOfRange) unless 0 < margin <= 1.
SystemGraph ApplyErrorMargin(const SystemGraph& g, double margin);

struct LogicFlip {
  NodeId node;
};
struct NodeOmission {
  NodeId node;
};
struct EdgeRewire {
  NodeId src;
  NodeId old_dst;
  NodeId new_dst;
};
class ErrorMargin {
 public:
  /// @throws Error(kMarginOutOfRange) unless 0 < e <= 1.
  explicit ErrorMargin(double e);
  double value() const { return value_; }

 private:
  double value_;
};

using Perturbation = std::variant<LogicFlip, NodeOmission, EdgeRewire, ErrorMargin>;

SystemGraph Apply(const SystemGraph& g, const Perturbation& p);

/// Short label such as "flip c" or "rewire d,b->d,e".
std::string Describe(const Perturbation& p);

struct ComparisonReport {
  RiskReport baseline;
  RiskReport variant;
  double jaccard = 0;
  double delta_risk = 0;  ///< variant.risk - baseline.risk
};

ComparisonReport Compare(const SystemGraph& baseline, const SystemGraph& variant);
ComparisonReport Compare(const Analysis& baseline, const SystemGraph& variant);

struct SweepRow {
  std::variant<double, NodeId> subject;  ///< Margin or node id.
  std::optional<double> delta_risk;
  std::optional<std::size_t> cutset_count;
  std::optional<double> jaccard;  ///< Absent for margin rows.
  std::optional<double> risk;
  bool skipped = false;  ///< Perturbation not applicable; no values.

  bool operator==(const SweepRow&) const = default;
};

struct SweepOptions {
  unsigned jobs = 1;  ///< Worker threads; never affects results.
};

/// One row per component, sorted by id.
std::vector<SweepRow> SweepFlip(const SystemGraph& g, SweepOptions opts = {});

/// One row per component, sorted by id; omitting the last indicator yields
/// a skipped row.
std::vector<SweepRow> SweepOmit(const SystemGraph& g, SweepOptions opts = {});

/// One row per distinct margin, ascending.
/// @throws Error(kMarginOutOfRange)
std::vector<SweepRow> SweepError(const SystemGraph& g,
                                 std::vector<double> margins,
                                 SweepOptions opts = {});

}  // namespace scra

#endif  // SCRA_PERTURB_H_
