#include "scra/perturb.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

namespace scra {

namespace {

void RequireComponent(const SystemGraph& g, const NodeId& node) {
  if (!g.contains(node))
    throw Error(ErrorCode::kUnknownNode, "unknown node '" + node.str() + "'");
  if (!g.is_component(node))
    throw Error(ErrorCode::kNotAComponent,
                "node '" + node.str() + "' is a supplier, not a component");
}

void RequireMargin(double margin) {
  if (!(margin > 0 && margin <= 1))
    throw Error(ErrorCode::kMarginOutOfRange,
                "error margin " + std::to_string(margin) +
                    " is outside (0, 1]");
}

/// Runs fn(0..n-1) on up to `jobs` threads; rethrows the lowest-index error.
void ParallelFor(std::size_t n, unsigned jobs,
                 const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  auto guarded = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  unsigned workers = std::min<std::size_t>(std::max(jobs, 1u), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) guarded(i);
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SweepRow RowFrom(std::variant<double, NodeId> subject,
                 const ComparisonReport& cmp) {
  SweepRow row;
  row.subject = std::move(subject);
  row.delta_risk = cmp.delta_risk;
  row.cutset_count = cmp.variant.cutset_count;
  row.jaccard = cmp.jaccard;
  row.risk = cmp.variant.risk;
  return row;
}

}  // namespace

SystemGraph FlipLogic(const SystemGraph& g, const NodeId& node) {
  RequireComponent(g, node);
  GraphParts parts = g.parts();
  for (ComponentNode& c : parts.components) {
    if (c.id == node) c.logic = Opposite(c.logic);
  }
  return BuildGraph(std::move(parts));
}

SystemGraph OmitNode(const SystemGraph& g, const NodeId& node) {
  RequireComponent(g, node);
  if (g.indicators().size() == 1 && g.indicators().count(node))
    throw Error(ErrorCode::kLastIndicator,
                "cannot omit '" + node.str() + "', the only indicator");

  GraphParts parts = g.parts();
  std::erase_if(parts.components, [&](auto& c) { return c.id == node; });
  std::erase_if(parts.edges,
                [&](auto& e) { return e.src == node || e.dst == node; });
  std::erase(parts.indicators, node);

  std::set<NodeId> live = NodesReachingIndicators(parts);
  auto dead = [&](const NodeId& id) { return live.count(id) == 0; };
  std::erase_if(parts.components, [&](auto& c) { return dead(c.id); });
  std::erase_if(parts.suppliers, [&](auto& s) { return dead(s.id); });
  std::erase_if(parts.edges,
                [&](auto& e) { return dead(e.src) || dead(e.dst); });
  return BuildGraph(std::move(parts));
}

SystemGraph RewireEdge(const SystemGraph& g, const NodeId& src,
                       const NodeId& old_dst, const NodeId& new_dst) {
  if (!g.edges().count(Edge{src, old_dst}))
    throw Error(ErrorCode::kUnknownEdge,
                "no edge " + src.str() + " -> " + old_dst.str());
  if (!g.contains(new_dst))
    throw Error(ErrorCode::kUnknownEndpoint,
                "unknown node '" + new_dst.str() + "'");
  if (!g.is_component(new_dst))
    throw Error(ErrorCode::kIllegalEdgeKind,
                "edge " + src.str() + " -> " + new_dst.str() +
                    " would target a supplier");
  if (new_dst == old_dst) return g;
  if (g.edges().count(Edge{src, new_dst}))
    throw Error(ErrorCode::kDuplicateEdge,
                "edge " + src.str() + " -> " + new_dst.str() + " already exists");

  GraphParts parts = g.parts();
  std::erase(parts.edges, Edge{src, old_dst});
  parts.edges.push_back(Edge{src, new_dst});
  try {
    return BuildGraph(std::move(parts));
  } catch (const ValidationError& e) {
    ErrorCode code = e.code() == ErrorCode::kCycleDetected
                         ? ErrorCode::kWouldCreateCycle
                         : e.code();
    throw Error(code, "rewiring " + src.str() + " -> " + new_dst.str() +
                          " is invalid: " + e.what());
  }
}

SystemGraph ApplyErrorMargin(const SystemGraph& g, double margin) {
  RequireMargin(margin);
  auto scale = [&](Probability p) {
    return Probability(std::min(1.0, p.value() * (1 + margin)));
  };
  GraphParts parts = g.parts();
  for (ComponentNode& c : parts.components) c.local_prob = scale(c.local_prob);
  for (SupplierNode& s : parts.suppliers) s.prob = scale(s.prob);
  return BuildGraph(std::move(parts));
}

ErrorMargin::ErrorMargin(double e) : value_(e) { RequireMargin(e); }

SystemGraph Apply(const SystemGraph& g, const Perturbation& p) {
  struct Visitor {
    const SystemGraph& g;
    SystemGraph operator()(const LogicFlip& f) const {
      return FlipLogic(g, f.node);
    }
    SystemGraph operator()(const NodeOmission& o) const {
      return OmitNode(g, o.node);
    }
    SystemGraph operator()(const EdgeRewire& r) const {
      return RewireEdge(g, r.src, r.old_dst, r.new_dst);
    }
    SystemGraph operator()(const ErrorMargin& m) const {
      return ApplyErrorMargin(g, m.value());
    }
  };
  return std::visit(Visitor{g}, p);
}

std::string Describe(const Perturbation& p) {
  struct Visitor {
    std::string operator()(const LogicFlip& f) const {
      return "flip " + f.node.str();
    }
    std::string operator()(const NodeOmission& o) const {
      return "omit " + o.node.str();
    }
    std::string operator()(const EdgeRewire& r) const {
      return "rewire " + r.src.str() + "," + r.old_dst.str() + "->" +
             r.src.str() + "," + r.new_dst.str();
    }
    std::string operator()(const ErrorMargin& m) const {
      return "error " + std::to_string(m.value());
    }
  };
  return std::visit(Visitor{}, p);
}

ComparisonReport Compare(const Analysis& baseline, const SystemGraph& variant) {
  Analysis other = Analyze(variant);
  ComparisonReport cmp;
  cmp.baseline = baseline.report;
  cmp.baseline.jaccard_vs_baseline = 0.0;
  cmp.baseline.delta_risk = 0.0;
  cmp.variant = other.report;
  cmp.jaccard = Jaccard(baseline.cutsets, other.cutsets);
  cmp.delta_risk = other.report.risk - baseline.report.risk;
  cmp.variant.jaccard_vs_baseline = cmp.jaccard;
  cmp.variant.delta_risk = cmp.delta_risk;
  return cmp;
}

ComparisonReport Compare(const SystemGraph& baseline,
                         const SystemGraph& variant) {
  return Compare(Analyze(baseline), variant);
}

std::vector<SweepRow> SweepFlip(const SystemGraph& g, SweepOptions opts) {
  Analysis base = Analyze(g);
  std::vector<NodeId> subjects;
  for (const auto& [id, c] : g.components()) subjects.push_back(id);
  std::vector<SweepRow> rows(subjects.size());
  ParallelFor(subjects.size(), opts.jobs, [&](std::size_t i) {
    rows[i] = RowFrom(subjects[i], Compare(base, FlipLogic(g, subjects[i])));
  });
  return rows;
}

std::vector<SweepRow> SweepOmit(const SystemGraph& g, SweepOptions opts) {
  Analysis base = Analyze(g);
  std::vector<NodeId> subjects;
  for (const auto& [id, c] : g.components()) subjects.push_back(id);
  std::vector<SweepRow> rows(subjects.size());
  ParallelFor(subjects.size(), opts.jobs, [&](std::size_t i) {
    const NodeId& id = subjects[i];
    if (g.indicators().size() == 1 && g.indicators().count(id)) {
      rows[i].subject = id;
      rows[i].skipped = true;
      return;
    }
    rows[i] = RowFrom(id, Compare(base, OmitNode(g, id)));
  });
  return rows;
}

std::vector<SweepRow> SweepError(const SystemGraph& g,
                                 std::vector<double> margins,
                                 SweepOptions opts) {
  for (double m : margins) RequireMargin(m);
  std::sort(margins.begin(), margins.end());
  margins.erase(std::unique(margins.begin(), margins.end()), margins.end());

  Analysis base = Analyze(g);
  std::vector<SweepRow> rows(margins.size());
  ParallelFor(margins.size(), opts.jobs, [&](std::size_t i) {
    rows[i] = RowFrom(margins[i], Compare(base, ApplyErrorMargin(g, margins[i])));
    rows[i].jaccard.reset();
  });
  return rows;
}

}  // namespace scra
