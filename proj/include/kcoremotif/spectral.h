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

// Normalized spectral clustering over a symmetric weighted adjacency:
// L_sym = D^-1/2 (D - W) D^-1/2, the eigenvectors of its smallest
// eigenvalues as coordinates, unit-norm rows, then k-means++.

#ifndef KCOREMOTIF_SPECTRAL_H_
#define KCOREMOTIF_SPECTRAL_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "kcoremotif/graph.h"
#include "kcoremotif/lanczos.h"
#include "kcoremotif/motif.h"
#include "kcoremotif/sparse.h"

namespace kcoremotif {

using ClusterId = std::int32_t;

// Per-node cluster assignment. Assigned ids lie in [0, next_label).
struct Labeling {
  static constexpr ClusterId kUnlabeled = -1;

  std::vector<ClusterId> label;
  ClusterId next_label = 0;

  explicit Labeling(NodeId n = 0) : label(n, kUnlabeled) {}

  NodeId size() const { return static_cast<NodeId>(label.size()); }
  bool IsLabeled(NodeId i) const { return label[i] != kUnlabeled; }
  NodeId CountUnlabeled() const;
  // Number of distinct assigned ids.
  ClusterId CountClusters() const;
};

using WeightMatrix = CsrMatrix<double>;

// Unit-weight symmetrization max(A, A^T) of a directed graph.
WeightMatrix EdgeAdjacency(const Graph& g);

struct LaplacianPair {
  // Normalized Laplacian over the embeddable nodes (local indices), with the
  // unit diagonal stored explicitly.
  WeightMatrix l_sym;
  // Weighted degree of every node of W (length = W.n).
  std::vector<double> degree;
  // Local index -> node of W, ascending. Nodes with zero degree are absent.
  std::vector<NodeId> embedded;
  std::vector<NodeId> excluded;
};

// Throws DataError when every degree is zero.
LaplacianPair BuildLaplacian(const WeightMatrix& w);
LaplacianPair BuildLaplacian(const MotifMatrix& w);

struct EigenOptions {
  // Connected pieces at most this large are solved densely.
  NodeId dense_threshold = 128;
  // Per-pair acceptance: ||L u - lambda u|| <= accept_residual * ||u||.
  double accept_residual = 1e-8;
  // Matrix-vector product parallelism.
  int workers = 1;
  LanczosOptions lanczos;
};

struct Embedding {
  Eigen::MatrixXd u;                // rows = embedded nodes
  std::vector<NodeId> row_of;       // row -> node of W
  Eigen::VectorXd eigenvalues;      // nondecreasing
  std::vector<double> residuals;    // ||L u - lambda u|| per column
  std::vector<bool> flagged;        // rows that were identically zero
};

// Eigenvectors of the k_eig smallest eigenvalues of L_sym. The Laplacian is
// block diagonal over connected pieces, so every piece is solved separately
// (thick-restart Lanczos on 2I - L_sym, or densely when small) and the
// spectra merged. When there are at least k_eig pieces the k_eig largest
// pieces contribute their null vectors. Requires 1 <= k_eig < embedded
// nodes. Throws ConvergenceError when a residual exceeds the acceptance.
Embedding SmallestEigenvectors(const LaplacianPair& lp, int k_eig,
                               const EigenOptions& options = {});

// Scales every row to unit Euclidean norm; all-zero rows are flagged and left
// untouched.
Embedding RowNormalize(Embedding e);

struct KMeansResult {
  std::vector<ClusterId> assignment;  // per row
  Eigen::MatrixXd centroids;
  double objective = 0.0;             // sum of squared distances
  int iterations = 0;
};

inline constexpr int kLloydIterationCap = 300;

// k-means++ seeding followed by Lloyd iterations until no assignment changes
// or the cap is hit. Throws DegenerateError when there are fewer distinct
// rows than clusters.
KMeansResult KMeans(const Eigen::MatrixXd& points, int n_clusters,
                    std::uint64_t seed, int max_iterations = kLloydIterationCap);

// KMeans over the non-flagged rows of an embedding. Nodes of the returned
// labeling (size num_nodes) that have no usable row stay unlabeled.
Labeling KMeansPP(const Embedding& e, int n_clusters, std::uint64_t seed,
                  NodeId num_nodes);

struct SpectralOptions {
  EigenOptions eigen;
};

// BuildLaplacian -> SmallestEigenvectors(k_eig = n_clusters) ->
// RowNormalize -> KMeansPP. Zero-degree nodes come back unlabeled.
Labeling SpectralCluster(const WeightMatrix& w, int n_clusters,
                         std::uint64_t seed, const SpectralOptions& options = {});

}  // namespace kcoremotif

#endif  // KCOREMOTIF_SPECTRAL_H_
