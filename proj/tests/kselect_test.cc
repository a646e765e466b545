// Copyright 2026 The KCoreMotif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kcoremotif/kselect.h"

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kcoremotif/errors.h"
#include "test_util.h"

namespace kcoremotif {
namespace {

using ::testing::ElementsAre;
using ::testing::Pair;

CorenessMap FromValues(std::vector<std::int32_t> v) { return CorenessMap{std::move(v)}; }

TEST(HistogramTest, SmallGraphs) {
  const Graph tri = Graph::FromEdges(3, {{0, 1}, {1, 2}, {2, 0}});
  const CorenessHistogram h = MakeCorenessHistogram(Coreness(tri));
  EXPECT_THAT(h.count_at, ElementsAre(Pair(2, 3)));
  EXPECT_EQ(h.n, 3);
  const Graph path = Graph::FromEdges(3, {{0, 1}, {1, 2}});
  EXPECT_THAT(MakeCorenessHistogram(Coreness(path)).count_at, ElementsAre(Pair(1, 3)));
}

TEST(HistogramTest, MatchesDirectTally) {
  const NodeId n = 150;
  const CorenessMap c =
      Coreness(Graph::FromEdges(n, testing::RandomDigraphEdges(n, 0.05, 2)));
  const CorenessHistogram h = MakeCorenessHistogram(c);
  std::int64_t total = 0;
  for (auto [value, count] : h.count_at) {
    EXPECT_EQ(count, std::count(c.core.begin(), c.core.end(), value));
    total += count;
  }
  EXPECT_EQ(total, n);
}

TEST(ClassifyTest, SyntheticNormal) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h =
        MakeCorenessHistogram(testing::SyntheticNormalCoreness(100000, 20, 4, seed));
    const DistributionClass d = ClassifyDistribution(h);
    EXPECT_EQ(d.kind, DistributionKind::kNormal) << seed;
    EXPECT_GT(d.fit_score_normal, d.fit_score_powerlaw);
    EXPECT_NEAR(d.normal_mean, 20.0, 0.1);
    EXPECT_NEAR(d.normal_sd, 4.0, 0.1);
  }
}

TEST(ClassifyTest, SyntheticPowerLaw) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h =
        MakeCorenessHistogram(testing::SyntheticPowerLawCoreness(100000, 2.5, 100, seed));
    const DistributionClass d = ClassifyDistribution(h);
    EXPECT_EQ(d.kind, DistributionKind::kPowerLaw) << seed;
    EXPECT_GT(d.fit_score_powerlaw, d.fit_score_normal);
    EXPECT_NEAR(d.powerlaw_exponent, 2.5, 0.05);
  }
}

TEST(ClassifyTest, ScoresAreClampedAndDeterministic) {
  const auto h = MakeCorenessHistogram(FromValues({1, 1, 1, 2, 2, 9}));
  const DistributionClass a = ClassifyDistribution(h);
  const DistributionClass b = ClassifyDistribution(h);
  for (double s : {a.fit_score_normal, a.fit_score_powerlaw}) {
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
  EXPECT_EQ(a.fit_score_normal, b.fit_score_normal);
  EXPECT_EQ(a.fit_score_powerlaw, b.fit_score_powerlaw);
}

TEST(ClassifyTest, FewerThanThreeValuesIsDegenerate) {
  EXPECT_THROW(ClassifyDistribution(MakeCorenessHistogram(FromValues({2, 2, 2}))),
               DegenerateError);
  EXPECT_THROW(ClassifyDistribution(MakeCorenessHistogram(FromValues({1, 4, 1}))),
               DegenerateError);
}

TEST(BandTest, Values) {
  EXPECT_EQ(BandFor(DistributionKind::kNormal).low, 0.40);
  EXPECT_EQ(BandFor(DistributionKind::kNormal).high, 0.50);
  EXPECT_EQ(BandFor(DistributionKind::kPowerLaw).low, 0.05);
  EXPECT_EQ(BandFor(DistributionKind::kPowerLaw).high, 0.10);
  EXPECT_EQ(DistributionName(DistributionKind::kPowerLaw), "POWER_LAW");
}

TEST(SelectKTest, SingleShell) {
  EXPECT_EQ(SelectK(FromValues({2, 2, 2, 2}), DistributionKind::kNormal), 2);
  EXPECT_EQ(SelectK(FromValues({2, 2, 2, 2}), DistributionKind::kPowerLaw), 2);
}

TEST(SelectKTest, TwoShellsHitTheBand) {
  std::vector<std::int32_t> v(100, 1);
  std::fill(v.begin() + 60, v.end(), 5);
  EXPECT_EQ(SelectK(FromValues(v), DistributionKind::kNormal), 5);
}

TEST(SelectKTest, FallsBackToOne) {
  // Only 1% above coreness 1: no k > 1 reaches 5%.
  std::vector<std::int32_t> v(100, 1);
  v[0] = 3;
  EXPECT_EQ(SelectK(FromValues(v), DistributionKind::kPowerLaw), 1);
}

TEST(SelectKTest, BandInvariant) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (DistributionKind kind : {DistributionKind::kNormal, DistributionKind::kPowerLaw}) {
      const CorenessMap c = seed % 2 == 0
                                ? testing::SyntheticNormalCoreness(5000, 12, 3, seed)
                                : testing::SyntheticPowerLawCoreness(5000, 2.2, 60, seed);
      const std::int32_t k = SelectK(c, kind);
      const double low = BandFor(kind).low;
      ASSERT_GE(k, 1);
      EXPECT_FALSE(KCoreNodes(c, k).empty());
      if (k > 1) EXPECT_GE(RetainedFraction(c, k), low);
      EXPECT_TRUE(k == c.MaxCore() || RetainedFraction(c, k + 1) < low);
    }
  }
}

}  // namespace
}  // namespace kcoremotif
