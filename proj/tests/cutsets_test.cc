#include "scra/cutsets.h"

#include <gtest/gtest.h>

#include "testing.h"

namespace scra::test {
namespace {

TEST(CutsetTest, CanonicalForm) {
  Cutset c({"k", "j", "k", "a"});
  EXPECT_EQ(c.events(), (std::vector<NodeId>{"a", "j", "k"}));
  EXPECT_EQ(c.ToString(), "{a,j,k}");
  EXPECT_THROW(Cutset(std::vector<NodeId>{}), std::invalid_argument);
}

TEST(CutsetTest, OrderBySizeThenIds) {
  EXPECT_LT(Cutset({"z"}), Cutset({"a", "b"}));
  EXPECT_LT(Cutset({"a", "c"}), Cutset({"b", "c"}));
  EXPECT_TRUE(Cutset({"a"}).IsSubsetOf(Cutset({"a", "b"})));
  EXPECT_FALSE(Cutset({"a", "b"}).IsSubsetOf(Cutset({"a"})));
}

TEST(MinimizeTest, Absorption) {
  EXPECT_EQ(Minimize(Family({"a", "a,b"})).cutsets(), Family({"a"}));
}

TEST(MinimizeTest, SetSemantics) {
  EXPECT_EQ(Minimize(Family({"a,b", "b,a"})).cutsets(), Family({"a,b"}));
}

TEST(MinimizeTest, GroundTruthIsAlreadyMinimal) {
  CutsetCollection once = Minimize(GroundTruthCutsets());
  EXPECT_EQ(once.size(), 53u);
  EXPECT_EQ(Minimize(once.cutsets()), once);
}

TEST(MinimizeTest, Idempotent) {
  auto family = Family({"b,c", "a", "c,a", "b,c,d", "d", "b,d,e"});
  CutsetCollection once = Minimize(family);
  EXPECT_EQ(once.cutsets(), Family({"a", "d", "b,c"}));
  EXPECT_EQ(Minimize(once.cutsets()), once);
}

TEST(CutsetCollectionTest, FromMinimalFamilyRejectsSupersets) {
  EXPECT_THROW(CutsetCollection::FromMinimalFamily(Family({"a", "a,b"})),
               std::invalid_argument);
  EXPECT_THROW(CutsetCollection::FromMinimalFamily(Family({"a", "a"})),
               std::invalid_argument);
}

TEST(MocusTest, GroundTruthFamily) {
  CutsetCollection got = Mocus(Expand(Case0()));
  EXPECT_EQ(got, CutsetCollection::FromMinimalFamily(GroundTruthCutsets()));
  // Spot checks in canonical display order.
  EXPECT_EQ(got.cutsets().front(), Cutset({"a"}));
  EXPECT_TRUE(got.Contains(Cutset({"r", "s"})));
  EXPECT_TRUE(got.Contains(Cutset({"d", "e", "f"})));
  EXPECT_EQ(got.cutsets().back(), Cutset({"j", "k", "m", "v", "w", "y"}));
}

TEST(MocusTest, SingleComponent) {
  ExpandedGraph g(kTopGateId,
                  {{kTopGateId, {LogicKind::kOr, {"x"}}}},
                  {{NodeId("x"), {"x", EventKind::kComponentLocal, Probability(0.3)}}});
  EXPECT_EQ(Mocus(g).cutsets(), Family({"x"}));
}

TEST(MocusTest, AndOverTwoLeaves) {
  SystemGraph g = BuildGraph({{"x", LogicKind::kOr, Probability(0.1)},
                              {"y", LogicKind::kOr, Probability(0.2)}},
                             {}, {}, {"x", "y"}, LogicKind::kAnd);
  EXPECT_EQ(Mocus(Expand(g)).cutsets(), Family({"x,y"}));
}

TEST(MocusTest, SharedSubgraphIsAbsorbed) {
  // y feeds both indicators; {y} must absorb {x,y} and {y,z}.
  SystemGraph g = ParseGraph(
      "node x component logic=and r=0.1\nnode z component logic=and r=0.1\n"
      "node y component r=0.1\nedge y -> x\nedge y -> z\n"
      "indicators x z logic=and\n");
  EXPECT_EQ(Mocus(Expand(g)).cutsets(), Family({"y", "x,z"}));
}

TEST(MocusTest, SuppliersAppearAsEvents) {
  CutsetCollection got = Mocus(Expand(LoadCase("supplied.sg")));
  EXPECT_EQ(got.cutsets(), Family({"acme", "firmware", "fwhouse", "gateway",
                                   "radio", "radiocorp"}));
}

TEST(MocusTest, GateCycleIsRejected) {
  ExpandedGraph g(kTopGateId,
                  {{kTopGateId, {LogicKind::kOr, {"g:1"}}},
                   {"g:1", {LogicKind::kAnd, {"g:2", "x"}}},
                   {"g:2", {LogicKind::kOr, {"g:1"}}}},
                  {{NodeId("x"), {"x", EventKind::kComponentLocal, Probability(0.3)}}});
  try {
    Mocus(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGateCycle);
  }
}

TEST(MocusTest, UnknownInputIsRejected) {
  ExpandedGraph g(kTopGateId, {{kTopGateId, {LogicKind::kOr, {"nope"}}}}, {});
  try {
    Mocus(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownInput);
  }
}

}  // namespace
}  // namespace scra::test
