#include "scra/analysis.h"

#include <gtest/gtest.h>

#include "testing.h"

namespace scra::test {
namespace {

ProbabilityMap Uniform(const std::string& ids, double r) {
  ProbabilityMap probs;
  for (char c : ids) probs.emplace(NodeId(std::string(1, c)), Probability(r));
  return probs;
}

const std::string kLetters = "abcdefghijklmnopqrstuvwxy";

TEST(RiskTest, GroundTruthAtFivePercent) {
  auto w = CutsetCollection::FromMinimalFamily(GroundTruthCutsets());
  EXPECT_NEAR(Risk(w, Uniform(kLetters, 0.05)), 0.403032, 1e-4);
}

TEST(RiskTest, EmptyFamilyIsZero) {
  EXPECT_EQ(Risk(CutsetCollection(), {}), 0.0);
}

TEST(RiskTest, Singleton) {
  auto w = CutsetCollection::FromMinimalFamily(Family({"x"}));
  EXPECT_DOUBLE_EQ(Risk(w, Uniform("x", 0.3)), 0.3);
}

TEST(RiskTest, MissingProbability) {
  auto w = CutsetCollection::FromMinimalFamily(Family({"x", "y,z"}));
  try {
    Risk(w, Uniform("xy", 0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingProbability);
  }
}

TEST(RiskTest, StaysInUnitInterval) {
  auto w = CutsetCollection::FromMinimalFamily(Family({"x", "y"}));
  EXPECT_EQ(Risk(w, Uniform("xy", 1.0)), 1.0);
  EXPECT_EQ(Risk(w, Uniform("xy", 0.0)), 0.0);
}

TEST(MetricsTest, GroundTruth) {
  CutsetMetrics m =
      ComputeMetrics(CutsetCollection::FromMinimalFamily(GroundTruthCutsets()));
  EXPECT_EQ(m.count, 53u);
  ASSERT_TRUE(m.average_size);
  EXPECT_NEAR(*m.average_size, 4.018868, 1e-6);
  EXPECT_DOUBLE_EQ(*m.average_size, 213.0 / 53.0);
}

TEST(MetricsTest, Small) {
  CutsetMetrics m = ComputeMetrics(Minimize(Family({"a", "b,c"})));
  EXPECT_EQ(m.count, 2u);
  EXPECT_DOUBLE_EQ(*m.average_size, 1.5);
}

TEST(MetricsTest, EmptyFamily) {
  CutsetMetrics m = ComputeMetrics(CutsetCollection());
  EXPECT_EQ(m.count, 0u);
  EXPECT_FALSE(m.average_size);
  try {
    AverageCutsetSize(CutsetCollection());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCollection);
  }
}

TEST(JaccardTest, Basics) {
  auto t1 = CutsetCollection::FromMinimalFamily(GroundTruthCutsets());
  EXPECT_EQ(Jaccard(t1, t1), 0.0);
  EXPECT_EQ(Jaccard(CutsetCollection(), CutsetCollection()), 0.0);
  EXPECT_EQ(Jaccard(t1, CutsetCollection()), 1.0);
  // {a},{b,c} vs {a},{d}: one shared out of three distinct cutsets.
  EXPECT_DOUBLE_EQ(Jaccard(Minimize(Family({"a", "b,c"})), Minimize(Family({"a", "d"}))),
                   2.0 / 3.0);
}

TEST(AnalyzeTest, GroundTruthReport) {
  Analysis a = Analyze(Case0());
  EXPECT_EQ(a.report.cutset_count, 53u);
  EXPECT_NEAR(*a.report.avg_cutset_size, 4.018868, 1e-6);
  EXPECT_NEAR(a.report.risk, 0.403032, 1e-4);
  EXPECT_FALSE(a.report.jaccard_vs_baseline);
  EXPECT_FALSE(a.report.delta_risk);
}

}  // namespace
}  // namespace scra::test
