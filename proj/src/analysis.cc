#include "scra/analysis.h"

#include <algorithm>
#include <iterator>

namespace scra {

double Risk(const CutsetCollection& cutsets, const ProbabilityMap& probs) {
  double secure = 1;
  for (const Cutset& cutset : cutsets) {
    double all_fail = 1;
    for (const NodeId& id : cutset.events()) {
      auto it = probs.find(id);
      if (it == probs.end())
        throw Error(ErrorCode::kMissingProbability,
                    "no probability for event '" + id.str() + "'");
      all_fail *= it->second.value();
    }
    secure *= 1 - all_fail;
  }
  return std::clamp(1 - secure, 0.0, 1.0);
}

CutsetMetrics ComputeMetrics(const CutsetCollection& cutsets) {
  CutsetMetrics m{cutsets.size(), std::nullopt};
  if (!cutsets.empty()) m.average_size = AverageCutsetSize(cutsets);
  return m;
}

double AverageCutsetSize(const CutsetCollection& cutsets) {
  if (cutsets.empty())
    throw Error(ErrorCode::kEmptyCollection,
                "average cutset size of an empty family is undefined");
  std::size_t total = 0;
  for (const Cutset& c : cutsets) total += c.size();
  return static_cast<double>(total) / static_cast<double>(cutsets.size());
}

double Jaccard(const CutsetCollection& a, const CutsetCollection& b) {
  std::vector<Cutset> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  std::size_t united = a.size() + b.size() - common.size();
  if (united == 0) return 0;
  return 1 - static_cast<double>(common.size()) / static_cast<double>(united);
}

RiskReport MakeReport(const CutsetCollection& cutsets,
                      const ProbabilityMap& probs) {
  RiskReport report;
  report.risk = Risk(cutsets, probs);
  CutsetMetrics m = ComputeMetrics(cutsets);
  report.cutset_count = m.count;
  report.avg_cutset_size = m.average_size;
  return report;
}

Analysis Analyze(const SystemGraph& graph) {
  ExpandedGraph expanded = Expand(graph);
  CutsetCollection cutsets = Mocus(expanded);
  RiskReport report = MakeReport(cutsets, expanded.probabilities());
  return Analysis{std::move(expanded), std::move(cutsets), report};
}

}  // namespace scra
