#include "scra/oracle.h"

#include <gtest/gtest.h>

#include "scra/expand.h"
#include "testing.h"

namespace scra::test {
namespace {

AssignmentVector AllSecure(const ExpandedGraph& g) {
  AssignmentVector a;
  for (const auto& [id, event] : g.events()) a[id] = EventState::kSecure;
  return a;
}

/// Sub-tree of the ground truth rooted at f.
SystemGraph SubtreeF() {
  return ParseGraph(
      "node f component logic=and r=0.05\n"
      "node n component logic=and r=0.05\n"
      "node o component logic=or r=0.05\n"
      "node v component r=0.05\nnode w component r=0.05\n"
      "node x component r=0.05\nnode y component r=0.05\n"
      "edge n -> f\nedge o -> f\nedge v -> n\nedge w -> n\n"
      "edge x -> o\nedge y -> o\n"
      "indicators f logic=or\n");
}

TEST(EvaluateStructureTest, SingleEventFailsSystem) {
  ExpandedGraph g = Expand(Case0());
  AssignmentVector a = AllSecure(g);
  a[NodeId("a")] = EventState::kFailed;
  EXPECT_EQ(EvaluateStructure(g, a), EventState::kFailed);
}

TEST(EvaluateStructureTest, PartialAndGroupDoesNotFail) {
  ExpandedGraph g = Expand(Case0());
  AssignmentVector a = AllSecure(g);
  a[NodeId("d")] = EventState::kFailed;
  a[NodeId("e")] = EventState::kFailed;
  EXPECT_EQ(EvaluateStructure(g, a), EventState::kSecure);
  a[NodeId("f")] = EventState::kFailed;
  EXPECT_EQ(EvaluateStructure(g, a), EventState::kFailed);
}

TEST(EvaluateStructureTest, AllSecureIsSecure) {
  ExpandedGraph g = Expand(Case0());
  EXPECT_EQ(EvaluateStructure(g, AllSecure(g)), EventState::kSecure);
}

TEST(EvaluateStructureTest, IncompleteAssignment) {
  ExpandedGraph g = Expand(Case0());
  AssignmentVector a = AllSecure(g);
  a.erase(NodeId("q"));
  try {
    EvaluateStructure(g, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteAssignment);
  }
}

TEST(BruteCutsetsTest, TooManyEventsOnGroundTruth) {
  try {
    BruteCutsets(Expand(Case0()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyEvents);
  }
}

TEST(BruteCutsetsTest, SubtreeRootedAtF) {
  CutsetCollection got = BruteCutsets(Expand(SubtreeF()));
  auto want = CutsetCollection::FromMinimalFamily(
      Family({"f", "n,o", "n,x", "n,y", "o,v,w", "v,w,x", "v,w,y"}));
  EXPECT_EQ(got, want);
}

TEST(BruteCutsetsTest, SingleComponent) {
  SystemGraph g = BuildGraph({{"x", LogicKind::kOr, Probability(0.3)}}, {}, {},
                             {"x"}, LogicKind::kOr);
  EXPECT_EQ(BruteCutsets(Expand(g)),
            CutsetCollection::FromMinimalFamily(Family({"x"})));
}

TEST(BruteCutsetsTest, TwoComponentsUnderAndTop) {
  SystemGraph g = BuildGraph({{"x", LogicKind::kOr, Probability(0.1)},
                              {"y", LogicKind::kOr, Probability(0.2)}},
                             {}, {}, {"x", "y"}, LogicKind::kAnd);
  EXPECT_EQ(BruteCutsets(Expand(g)),
            CutsetCollection::FromMinimalFamily(Family({"x,y"})));
}

TEST(ExactProbabilityTest, TwoSingletonsUnderOr) {
  SystemGraph g = BuildGraph({{"x", LogicKind::kOr, Probability(0.05)},
                              {"y", LogicKind::kOr, Probability(0.05)}},
                             {}, {}, {"x", "y"}, LogicKind::kOr);
  ExpandedGraph e = Expand(g);
  EXPECT_NEAR(ExactProbability(e, e.probabilities()), 0.0975, 1e-15);
}

TEST(ExactProbabilityTest, MissingProbability) {
  ExpandedGraph e = Expand(SubtreeF());
  ProbabilityMap probs = e.probabilities();
  probs.erase(NodeId("v"));
  try {
    ExactProbability(e, probs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingProbability);
  }
}

TEST(OracleTest, MonotoneStructureFunction) {
  // Flipping any event from secure to failed never repairs the system.
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    ExpandedGraph g = Expand(RandomGraph(seed));
    std::vector<NodeId> ids;
    for (const auto& [id, e] : g.events()) ids.push_back(id);
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      AssignmentVector a;
      for (const NodeId& id : ids)
        a[id] = rng() % 2 ? EventState::kFailed : EventState::kSecure;
      if (EvaluateStructure(g, a) != EventState::kFailed) continue;
      for (const NodeId& id : ids) {
        AssignmentVector b = a;
        b[id] = EventState::kFailed;
        EXPECT_EQ(EvaluateStructure(g, b), EventState::kFailed) << "seed " << seed;
      }
    }
  }
}

}  // namespace
}  // namespace scra::test
