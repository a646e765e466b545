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

#include "kcoremotif/spectral.h"

#include <random>
#include <set>

#include <Eigen/Eigenvalues>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kcoremotif/errors.h"
#include "test_util.h"

namespace kcoremotif {
namespace {

using ::testing::ElementsAre;

Eigen::MatrixXd DenseOf(const WeightMatrix& m, Eigen::Index n) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) d(i, j) = m.At(i, j);
  }
  return d;
}

// Two dense groups joined by a single light edge.
WeightMatrix TwoCliques(NodeId size, double bridge) {
  std::vector<std::tuple<NodeId, NodeId, double>> t;
  for (NodeId base : {0, size}) {
    for (NodeId i = 0; i < size; ++i) {
      for (NodeId j = 0; j < size; ++j) {
        if (i != j) t.emplace_back(base + i, base + j, 1.0);
      }
    }
  }
  if (bridge > 0) {
    t.emplace_back(0, size, bridge);
    t.emplace_back(size, 0, bridge);
  }
  return WeightMatrix::FromTriplets(2 * size, std::move(t));
}

EigenOptions ForceLanczos() {
  EigenOptions o;
  o.dense_threshold = 0;
  return o;
}

TEST(LaplacianTest, TwoNodeExample) {
  const WeightMatrix w = WeightMatrix::FromTriplets(2, {{0, 1, 1.0}, {1, 0, 1.0}});
  const LaplacianPair lp = BuildLaplacian(w);
  EXPECT_DOUBLE_EQ(lp.l_sym.At(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(lp.l_sym.At(0, 1), -1.0);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(DenseOf(lp.l_sym, 2));
  EXPECT_NEAR(es.eigenvalues()[0], 0.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues()[1], 2.0, 1e-14);
}

TEST(LaplacianTest, IsolatedNodesAreExcluded) {
  const WeightMatrix w = WeightMatrix::FromTriplets(3, {{0, 2, 1.0}, {2, 0, 1.0}});
  const LaplacianPair lp = BuildLaplacian(w);
  EXPECT_THAT(lp.embedded, ElementsAre(0, 2));
  EXPECT_THAT(lp.excluded, ElementsAre(1));
  EXPECT_EQ(lp.l_sym.n, 2);
  EXPECT_THAT(lp.degree, ElementsAre(1.0, 0.0, 1.0));
  EXPECT_THROW(BuildLaplacian(WeightMatrix::FromTriplets(3, {})), DataError);
}

TEST(LaplacianTest, MatchesDenseFormulaAndIsScaleInvariant) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightMatrix w = testing::RandomSymmetricWeights(40, 0.1, seed);
    const LaplacianPair lp = BuildLaplacian(w);
    const Eigen::MatrixXd oracle = testing::DenseNormalizedLaplacian(w);
    const auto m = static_cast<Eigen::Index>(lp.embedded.size());
    ASSERT_EQ(oracle.rows(), m);
    EXPECT_LT((DenseOf(lp.l_sym, m) - oracle).cwiseAbs().maxCoeff(), 1e-14);

    std::vector<std::tuple<NodeId, NodeId, double>> scaled;
    for (NodeId i = 0; i < w.n; ++i) {
      auto cols = w.RowCols(i);
      auto vals = w.RowValues(i);
      for (std::size_t p = 0; p < cols.size(); ++p) {
        scaled.emplace_back(i, cols[p], 3.5 * vals[p]);
      }
    }
    const LaplacianPair lc =
        BuildLaplacian(WeightMatrix::FromTriplets(w.n, std::move(scaled)));
    EXPECT_LT((DenseOf(lc.l_sym, m) - oracle).cwiseAbs().maxCoeff(), 1e-13);

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
    EXPECT_LT(es.eigenvalues().maxCoeff(), 2 + 1e-12);
  }
}

TEST(LaplacianTest, MotifMatrixOverload) {
  const Graph cycle = Graph::FromEdges(3, {{0, 1}, {1, 2}, {2, 0}});
  const LaplacianPair lp = BuildLaplacian(MotifAdjacency(cycle, MotifType::kM1));
  EXPECT_THAT(lp.degree, ElementsAre(2.0, 2.0, 2.0));
  EXPECT_DOUBLE_EQ(lp.l_sym.At(0, 1), -0.5);
}

TEST(SmallestEigenvectorsTest, NullVectorIsSqrtDegree) {
  const WeightMatrix w = testing::RandomSymmetricWeights(30, 0.5, 1);
  const LaplacianPair lp = BuildLaplacian(w);
  ASSERT_EQ(lp.embedded.size(), 30u);
  for (const EigenOptions& o : {EigenOptions{}, ForceLanczos()}) {
    const Embedding e = SmallestEigenvectors(lp, 1, o);
    EXPECT_NEAR(e.eigenvalues[0], 0.0, 1e-10);
    Eigen::VectorXd s(30);
    for (int i = 0; i < 30; ++i) s[i] = std::sqrt(lp.degree[i]);
    s.normalize();
    EXPECT_NEAR(std::abs(s.dot(e.u.col(0))), 1.0, 1e-10);
  }
}

TEST(SmallestEigenvectorsTest, ComponentCountGivesZeroMultiplicity) {
  // Three disjoint cliques of sizes 5, 6, 7.
  std::vector<std::tuple<NodeId, NodeId, double>> t;
  NodeId base = 0;
  for (NodeId size : {5, 6, 7}) {
    for (NodeId i = 0; i < size; ++i) {
      for (NodeId j = 0; j < size; ++j) {
        if (i != j) t.emplace_back(base + i, base + j, 1.0);
      }
    }
    base += size;
  }
  const LaplacianPair lp = BuildLaplacian(WeightMatrix::FromTriplets(18, std::move(t)));
  for (const EigenOptions& o : {EigenOptions{}, ForceLanczos()}) {
    const Embedding e = SmallestEigenvectors(lp, 4, o);
    EXPECT_NEAR(e.eigenvalues[0], 0.0, 1e-12);
    EXPECT_NEAR(e.eigenvalues[1], 0.0, 1e-12);
    EXPECT_NEAR(e.eigenvalues[2], 0.0, 1e-12);
    // Next eigenvalue of the 7-clique Laplacian: 7/6.
    EXPECT_NEAR(e.eigenvalues[3], 7.0 / 6.0, 1e-9);
  }
}

TEST(SmallestEigenvectorsTest, MorePiecesThanVectorsLeavesNoZeroRow) {
  // Cliques of sizes 5, 7, 6 and k_eig = 2: the 7-clique gets its own
  // column, the other two share the second.
  std::vector<std::tuple<NodeId, NodeId, double>> t;
  NodeId base = 0;
  for (NodeId size : {5, 7, 6}) {
    for (NodeId i = 0; i < size; ++i) {
      for (NodeId j = 0; j < size; ++j) {
        if (i != j) t.emplace_back(base + i, base + j, 1.0);
      }
    }
    base += size;
  }
  const LaplacianPair lp = BuildLaplacian(WeightMatrix::FromTriplets(18, std::move(t)));
  const Embedding e = SmallestEigenvectors(lp, 2);
  EXPECT_EQ(e.eigenvalues[0], 0.0);
  EXPECT_EQ(e.eigenvalues[1], 0.0);
  for (int r = 0; r < 18; ++r) {
    const bool big = r >= 5 && r < 12;
    EXPECT_EQ(e.u(r, 0) != 0.0, big) << r;
    EXPECT_EQ(e.u(r, 1) != 0.0, !big) << r;
  }
  const Eigen::MatrixXd gram = e.u.transpose() * e.u;
  EXPECT_LT((gram - Eigen::MatrixXd::Identity(2, 2)).norm(), 1e-14);
  const Eigen::MatrixXd dense = DenseOf(lp.l_sym, 18);
  EXPECT_LT((dense * e.u).norm(), 1e-14);
}

TEST(SmallestEigenvectorsTest, MatchesDenseSolver) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const WeightMatrix w = testing::RandomSymmetricWeights(90, 0.08, seed);
    const LaplacianPair lp = BuildLaplacian(w);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        testing::DenseNormalizedLaplacian(w));
    for (const EigenOptions& o : {EigenOptions{}, ForceLanczos()}) {
      const Embedding e = SmallestEigenvectors(lp, 4, o);
      ASSERT_EQ(e.eigenvalues.size(), 4);
      for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(e.eigenvalues[i], es.eigenvalues()[i], 1e-8) << "seed " << seed;
        EXPECT_LE(e.residuals[i], 1e-8);
      }
    }
  }
}

TEST(SmallestEigenvectorsTest, LanczosTwoHundredNodes) {
  const WeightMatrix w = testing::RandomSymmetricWeights(200, 0.05, 99);
  const LaplacianPair lp = BuildLaplacian(w);
  const Eigen::MatrixXd dense = testing::DenseNormalizedLaplacian(w);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
  const Embedding e = SmallestEigenvectors(lp, 6, ForceLanczos());
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(e.eigenvalues[i], es.eigenvalues()[i], 1e-8);
    const Eigen::VectorXd v = e.u.col(i);
    EXPECT_LE((dense * v - e.eigenvalues[i] * v).norm(), 1e-8 * v.norm());
  }
}

TEST(SmallestEigenvectorsTest, RejectsBadK) {
  const LaplacianPair lp = BuildLaplacian(TwoCliques(3, 0.0));
  EXPECT_THROW(SmallestEigenvectors(lp, 0), ConfigError);
  EXPECT_THROW(SmallestEigenvectors(lp, 6), ConfigError);
}

TEST(RowNormalizeTest, UnitRowsAndZeroFlag) {
  Embedding e;
  e.u.resize(2, 2);
  e.u << 3, 4, 0, 0;
  e.row_of = {0, 1};
  const Embedding r = RowNormalize(e);
  EXPECT_DOUBLE_EQ(r.u(0, 0), 0.6);
  EXPECT_DOUBLE_EQ(r.u(0, 1), 0.8);
  EXPECT_THAT(r.flagged, ElementsAre(false, true));
}

TEST(KMeansTest, SeparatedGroups) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 0.05);
  Eigen::MatrixXd pts(90, 2);
  for (int i = 0; i < 90; ++i) {
    const int c = i % 3;
    pts(i, 0) = 10.0 * c + noise(rng);
    pts(i, 1) = (c == 1 ? 5.0 : 0.0) + noise(rng);
  }
  const KMeansResult r = KMeans(pts, 3, 1);
  for (int i = 3; i < 90; ++i) EXPECT_EQ(r.assignment[i], r.assignment[i % 3]);
  std::set<ClusterId> ids(r.assignment.begin(), r.assignment.end());
  EXPECT_EQ(ids.size(), 3u);
}

TEST(KMeansTest, SingleClusterIsTheMean) {
  Eigen::MatrixXd pts(4, 1);
  pts << 0, 1, 2, 5;
  const KMeansResult r = KMeans(pts, 1, 0);
  EXPECT_THAT(r.assignment, ElementsAre(0, 0, 0, 0));
  EXPECT_DOUBLE_EQ(r.centroids(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(r.objective, 4.0 + 1.0 + 0.0 + 9.0);
}

TEST(KMeansTest, NoWorseThanRandomPartitions) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd pts(200, 3);
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 3; ++j) pts(i, j) = u(rng);
  }
  const int k = 5;
  const KMeansResult r = KMeans(pts, k, 2);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> a(200);
    for (int& x : a) x = pick(rng);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(k, 3);
    Eigen::VectorXd cnt = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < 200; ++i) {
      c.row(a[i]) += pts.row(i);
      cnt[a[i]] += 1;
    }
    double obj = 0.0;
    for (int i = 0; i < 200; ++i) {
      obj += (pts.row(i) - c.row(a[i]) / std::max(1.0, cnt[a[i]])).squaredNorm();
    }
    EXPECT_LE(r.objective, obj);
  }
}

TEST(KMeansTest, TooFewDistinctPoints) {
  Eigen::MatrixXd pts(4, 2);
  pts << 1, 1, 1, 1, 2, 2, 2, 2;
  EXPECT_THROW(KMeans(pts, 3, 0), DegenerateError);
  EXPECT_NO_THROW(KMeans(pts, 2, 0));
}

TEST(KMeansTest, Deterministic) {
  const WeightMatrix w = testing::RandomSymmetricWeights(100, 0.05, 5);
  const Labeling a = SpectralCluster(w, 4, 123);
  const Labeling b = SpectralCluster(w, 4, 123);
  EXPECT_EQ(a.label, b.label);
}

TEST(SpectralClusterTest, TwoCliquesSplit) {
  for (double bridge : {0.0, 0.1}) {
    const Labeling l = SpectralCluster(TwoCliques(8, bridge), 2, 7);
    EXPECT_EQ(l.next_label, 2);
    for (NodeId i = 1; i < 8; ++i) {
      EXPECT_EQ(l.label[i], l.label[0]);
      EXPECT_EQ(l.label[8 + i], l.label[8]);
    }
    EXPECT_NE(l.label[0], l.label[8]);
  }
}

TEST(SpectralClusterTest, TwinNodesShareALabel) {
  // Nodes 0 and 1 have identical neighborhoods and so identical rows.
  std::vector<std::tuple<NodeId, NodeId, double>> t;
  auto add = [&t](NodeId a, NodeId b) {
    t.emplace_back(a, b, 1.0);
    t.emplace_back(b, a, 1.0);
  };
  for (NodeId v : {2, 3, 4}) {
    add(0, v);
    add(1, v);
  }
  add(4, 5);
  add(5, 6);
  add(6, 7);
  add(7, 5);
  const Labeling l = SpectralCluster(WeightMatrix::FromTriplets(8, std::move(t)), 3, 0);
  EXPECT_EQ(l.label[0], l.label[1]);
}

TEST(SpectralClusterTest, ZeroDegreeNodesStayUnlabeled) {
  std::vector<std::tuple<NodeId, NodeId, double>> t;
  for (NodeId i = 0; i < 4; ++i) {
    for (NodeId j = 0; j < 4; ++j) {
      if (i != j) t.emplace_back(i, j, 1.0);
    }
  }
  const Labeling l = SpectralCluster(WeightMatrix::FromTriplets(6, std::move(t)), 1, 0);
  EXPECT_THAT(l.label, ElementsAre(0, 0, 0, 0, Labeling::kUnlabeled, Labeling::kUnlabeled));
  EXPECT_EQ(l.CountUnlabeled(), 2);
}

TEST(SpectralClusterTest, TooFewEmbeddedNodes) {
  EXPECT_THROW(SpectralCluster(TwoCliques(2, 0.0), 4, 0), DegenerateError);
}

}  // namespace
}  // namespace kcoremotif
