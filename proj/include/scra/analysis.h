/// @file analysis.h
/// Systemic risk and cutset metrics.

#ifndef SCRA_ANALYSIS_H_
#define SCRA_ANALYSIS_H_

#include <cstddef>
#include <optional>

#include "scra/cutsets.h"
#include "scra/expand.h"
#include "scra/graph.h"

namespace scra {

/// 1 - prod_{w in W} (1 - prod_{v in w} r_v), the min-cut upper bound.
///
/// Evaluated in canonical cutset order and clamped to [0, 1].
/// @throws Error(kMissingProbability) if an event has no probability.
double Risk(const CutsetCollection& cutsets, const ProbabilityMap& probs);

struct CutsetMetrics {
  std::size_t count = 0;
  std::optional<double> average_size;  ///< Absent for an empty family.
};

CutsetMetrics ComputeMetrics(const CutsetCollection& cutsets);

/// @throws Error(kEmptyCollection)
double AverageCutsetSize(const CutsetCollection& cutsets);

/// 1 - |A ∩ B| / |A ∪ B| with whole cutsets as elements; 0 if both empty.
double Jaccard(const CutsetCollection& a, const CutsetCollection& b);

struct RiskReport {
  double risk = 0;
  std::size_t cutset_count = 0;
  std::optional<double> avg_cutset_size;
  std::optional<double> jaccard_vs_baseline;
  std::optional<double> delta_risk;

  bool operator==(const RiskReport&) const = default;
};

struct Analysis {
  ExpandedGraph expanded;
  CutsetCollection cutsets;
  RiskReport report;
};

/// Expand, extract cutsets, and evaluate risk with the graph's own
/// probabilities.
Analysis Analyze(const SystemGraph& graph);

RiskReport MakeReport(const CutsetCollection& cutsets,
                      const ProbabilityMap& probs);

}  // namespace scra

#endif  // SCRA_ANALYSIS_H_
