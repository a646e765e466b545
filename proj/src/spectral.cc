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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "kcoremotif/errors.h"
#include "kcoremotif/parallel.h"

namespace kcoremotif {

NodeId Labeling::CountUnlabeled() const {
  return static_cast<NodeId>(
      std::count(label.begin(), label.end(), kUnlabeled));
}

ClusterId Labeling::CountClusters() const {
  std::vector<ClusterId> ids;
  for (ClusterId c : label) {
    if (c != kUnlabeled) ids.push_back(c);
  }
  std::sort(ids.begin(), ids.end());
  return static_cast<ClusterId>(std::unique(ids.begin(), ids.end()) -
                                ids.begin());
}

WeightMatrix EdgeAdjacency(const Graph& g) {
  const Graph::Undirected u = g.ToUndirected();
  WeightMatrix w;
  w.n = g.num_nodes();
  w.offsets = u.offsets;
  w.cols = u.neighbors;
  w.values.assign(w.cols.size(), 1.0);
  return w;
}

LaplacianPair BuildLaplacian(const WeightMatrix& w) {
  LaplacianPair lp;
  lp.degree.assign(w.n, 0.0);
  for (NodeId i = 0; i < w.n; ++i) {
    for (double v : w.RowValues(i)) lp.degree[i] += v;
  }
  std::vector<NodeId> local(w.n, -1);
  for (NodeId i = 0; i < w.n; ++i) {
    if (lp.degree[i] > 0.0) {
      local[i] = static_cast<NodeId>(lp.embedded.size());
      lp.embedded.push_back(i);
    } else {
      lp.excluded.push_back(i);
    }
  }
  if (lp.embedded.empty()) {
    throw DataError("no embeddable nodes: every weighted degree is zero");
  }

  std::vector<double> inv_sqrt(w.n, 0.0);
  for (NodeId i : lp.embedded) inv_sqrt[i] = 1.0 / std::sqrt(lp.degree[i]);

  WeightMatrix& l = lp.l_sym;
  l.n = static_cast<NodeId>(lp.embedded.size());
  l.offsets.assign(static_cast<std::size_t>(l.n) + 1, 0);
  for (NodeId li = 0; li < l.n; ++li) {
    const NodeId i = lp.embedded[li];
    auto cols = w.RowCols(i);
    auto vals = w.RowValues(i);
    bool diagonal_done = false;
    auto emit_diagonal = [&] {
      l.cols.push_back(li);
      l.values.push_back(1.0);
      diagonal_done = true;
    };
    for (std::size_t p = 0; p < cols.size(); ++p) {
      const NodeId lj = local[cols[p]];
      if (cols[p] == i || lj < 0) continue;
      if (!diagonal_done && lj > li) emit_diagonal();
      l.cols.push_back(lj);
      l.values.push_back(-vals[p] * inv_sqrt[i] * inv_sqrt[cols[p]]);
    }
    if (!diagonal_done) emit_diagonal();
    l.offsets[li + 1] = l.nnz();
  }
  return lp;
}

LaplacianPair BuildLaplacian(const MotifMatrix& w) {
  return BuildLaplacian(w.Cast<double>());
}

namespace {

// One connected piece of L_sym in its own local numbering.
struct Piece {
  std::vector<NodeId> rows;  // local rows of lp.l_sym, ascending
  WeightMatrix l;
};

std::vector<Piece> ConnectedPieces(const WeightMatrix& l) {
  std::vector<NodeId> piece_of(l.n, -1);
  std::vector<std::vector<NodeId>> members;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < l.n; ++s) {
    if (piece_of[s] >= 0) continue;
    const auto id = static_cast<NodeId>(members.size());
    members.emplace_back();
    piece_of[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      members[id].push_back(v);
      for (NodeId w : l.RowCols(v)) {
        if (piece_of[w] < 0) {
          piece_of[w] = id;
          stack.push_back(w);
        }
      }
    }
  }

  std::vector<NodeId> local(l.n, -1);
  std::vector<Piece> pieces(members.size());
  for (std::size_t p = 0; p < members.size(); ++p) {
    Piece& piece = pieces[p];
    piece.rows = std::move(members[p]);
    std::sort(piece.rows.begin(), piece.rows.end());
    for (std::size_t r = 0; r < piece.rows.size(); ++r) {
      local[piece.rows[r]] = static_cast<NodeId>(r);
    }
    piece.l.n = static_cast<NodeId>(piece.rows.size());
    piece.l.offsets.assign(piece.rows.size() + 1, 0);
    for (std::size_t r = 0; r < piece.rows.size(); ++r) {
      auto cols = l.RowCols(piece.rows[r]);
      auto vals = l.RowValues(piece.rows[r]);
      for (std::size_t q = 0; q < cols.size(); ++q) {
        piece.l.cols.push_back(local[cols[q]]);
        piece.l.values.push_back(vals[q]);
      }
      piece.l.offsets[r + 1] = piece.l.nnz();
    }
  }
  // Largest pieces first; ties keep discovery order (smallest node first).
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Piece& a, const Piece& b) {
                     return a.rows.size() > b.rows.size();
                   });
  return pieces;
}

void Multiply(const WeightMatrix& l, const Eigen::VectorXd& x,
              Eigen::VectorXd& y, int workers) {
  y.resize(l.n);
  ParallelFor(l.n, workers, [&](std::int64_t begin, std::int64_t end) {
    for (auto i = static_cast<NodeId>(begin); i < end; ++i) {
      double sum = 0.0;
      for (std::int64_t p = l.offsets[i]; p < l.offsets[i + 1]; ++p) {
        sum += l.values[p] * x[l.cols[p]];
      }
      y[i] = sum;
    }
  });
}

struct PiecePairs {
  Eigen::VectorXd values;   // ascending, eigenvalues of L_sym
  Eigen::MatrixXd vectors;
};

PiecePairs DenseSmallest(const WeightMatrix& l, int need) {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(l.n, l.n);
  for (NodeId i = 0; i < l.n; ++i) {
    auto cols = l.RowCols(i);
    auto vals = l.RowValues(i);
    for (std::size_t p = 0; p < cols.size(); ++p) dense(i, cols[p]) = vals[p];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  return {solver.eigenvalues().head(need), solver.eigenvectors().leftCols(need)};
}

PiecePairs LanczosSmallest(const WeightMatrix& l, int need,
                           const EigenOptions& options) {
  // Smallest eigenvalues of L_sym are the largest of 2I - L_sym, which is
  // positive semidefinite.
  Eigen::VectorXd tmp;
  MatVec shifted = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    Multiply(l, x, tmp, options.workers);
    y = 2.0 * x - tmp;
  };
  // Missing the 1e-10 target is tolerated here; the caller checks every
  // pair against the acceptance residual.
  LanczosResult r = LargestEigenpairs(shifted, l.n, need, options.lanczos);
  Eigen::VectorXd theta = r.values;
  Eigen::MatrixXd vectors = r.vectors;

  // A single Krylov sequence only sees one direction of a repeated
  // eigenvalue. Probe the orthogonal complement for anything larger than
  // the smallest kept Ritz value and swap it in.
  const double slack = 1e-9;
  for (int probe = 0; probe < need && vectors.cols() < l.n; ++probe) {
    LanczosOptions probe_options = options.lanczos;
    probe_options.seed += 0x632be59bd9b4e019ULL * (probe + 1);
    LanczosResult extra =
        LargestEigenpairs(shifted, l.n, 1, probe_options, vectors);
    if (!extra.converged || extra.values[0] <= theta[need - 1] + slack) break;
    Eigen::Index pos = 0;
    while (pos < need && theta[pos] >= extra.values[0]) ++pos;
    for (Eigen::Index q = need - 1; q > pos; --q) {
      theta[q] = theta[q - 1];
      vectors.col(q) = vectors.col(q - 1);
    }
    theta[pos] = extra.values[0];
    vectors.col(pos) = extra.vectors.col(0);
  }
  return {(2.0 - theta.array()).matrix(), vectors};
}

}  // namespace

Embedding SmallestEigenvectors(const LaplacianPair& lp, int k_eig,
                               const EigenOptions& options) {
  const NodeId n = lp.l_sym.n;
  if (k_eig < 1 || k_eig >= n) {
    throw ConfigError("k_eig must satisfy 1 <= k_eig < " + std::to_string(n) +
                      " embeddable nodes, got " + std::to_string(k_eig));
  }
  const std::vector<Piece> pieces = ConnectedPieces(lp.l_sym);
  const auto num_pieces = static_cast<int>(pieces.size());

  struct Candidate {
    double value;
    int piece;
    int column;
  };
  std::vector<Candidate> candidates;
  std::vector<PiecePairs> solved(pieces.size());

  Embedding e;
  e.u = Eigen::MatrixXd::Zero(n, k_eig);
  e.row_of = lp.embedded;
  e.eigenvalues.resize(k_eig);
  e.residuals.assign(k_eig, 0.0);
  e.flagged.assign(n, false);
  Eigen::VectorXd lu;
  auto accept = [&](int col, double residual) {
    if (!(residual <= options.accept_residual)) {
      std::ostringstream msg;
      msg << "eigenpair " << col << " residual " << residual
          << " exceeds acceptance " << options.accept_residual;
      throw ConvergenceError(msg.str(), residual);
    }
    e.residuals[col] = residual;
  };

  if (num_pieces >= k_eig) {
    // The null space is spanned by D^1/2 1 restricted to each piece. The
    // k_eig - 1 largest pieces get a column each; the last column is the
    // null vector of all remaining pieces together, so no embedded row is
    // left at zero.
    for (int p = 0; p < num_pieces; ++p) {
      const Piece& piece = pieces[p];
      const int col = std::min(p, k_eig - 1);
      for (NodeId r = 0; r < piece.l.n; ++r) {
        e.u(piece.rows[r], col) = std::sqrt(lp.degree[lp.embedded[piece.rows[r]]]);
      }
    }
    for (int col = 0; col < k_eig; ++col) {
      e.u.col(col).normalize();
      Multiply(lp.l_sym, e.u.col(col), lu, options.workers);
      e.eigenvalues[col] = 0.0;
      accept(col, lu.norm());
    }
    return e;
  }

  for (int p = 0; p < num_pieces; ++p) {
    const Piece& piece = pieces[p];
    const int need = std::min<int>(piece.l.n, k_eig - num_pieces + 1);
    solved[p] = piece.l.n <= options.dense_threshold
                    ? DenseSmallest(piece.l, need)
                    : LanczosSmallest(piece.l, need, options);
    for (int c = 0; c < solved[p].values.size(); ++c) {
      candidates.push_back({solved[p].values[c], p, c});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return std::tie(a.value, a.piece) < std::tie(b.value, b.piece);
                   });

  for (int col = 0; col < k_eig; ++col) {
    const Candidate& cand = candidates[col];
    const Piece& piece = pieces[cand.piece];
    const Eigen::VectorXd v = solved[cand.piece].vectors.col(cand.column);
    Multiply(piece.l, v, lu, options.workers);
    accept(col, (lu - cand.value * v).norm() / v.norm());
    e.eigenvalues[col] = cand.value;
    for (NodeId r = 0; r < piece.l.n; ++r) e.u(piece.rows[r], col) = v[r];
  }
  return e;
}

Embedding RowNormalize(Embedding e) {
  e.flagged.assign(e.u.rows(), false);
  for (Eigen::Index r = 0; r < e.u.rows(); ++r) {
    const double norm = e.u.row(r).norm();
    if (norm == 0.0) {
      e.flagged[r] = true;
    } else {
      e.u.row(r) /= norm;
    }
  }
  return e;
}

namespace {

double Uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Eigen::Index CountDistinctRows(const Eigen::MatrixXd& points) {
  std::vector<Eigen::Index> idx(points.rows());
  std::iota(idx.begin(), idx.end(), 0);
  auto row_less = [&](Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index c = 0; c < points.cols(); ++c) {
      if (points(a, c) != points(b, c)) return points(a, c) < points(b, c);
    }
    return false;
  };
  std::sort(idx.begin(), idx.end(), row_less);
  Eigen::Index distinct = idx.empty() ? 0 : 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (row_less(idx[i - 1], idx[i])) ++distinct;
  }
  return distinct;
}

}  // namespace

KMeansResult KMeans(const Eigen::MatrixXd& points, int n_clusters,
                    std::uint64_t seed, int max_iterations) {
  const Eigen::Index n = points.rows();
  if (n_clusters < 1) throw ConfigError("n_clusters must be positive");
  if (CountDistinctRows(points) < n_clusters) {
    throw DegenerateError("cannot form " + std::to_string(n_clusters) +
                          " clusters from " +
                          std::to_string(CountDistinctRows(points)) +
                          " distinct points");
  }

  std::mt19937_64 rng(seed);
  Eigen::MatrixXd centroids(n_clusters, points.cols());
  Eigen::VectorXd nearest(n);

  // k-means++ seeding: first center uniform, then proportional to the
  // squared distance to the closest chosen center.
  const auto first = static_cast<Eigen::Index>(Uniform01(rng) * n);
  centroids.row(0) = points.row(std::min(first, n - 1));
  for (Eigen::Index i = 0; i < n; ++i) {
    nearest[i] = (points.row(i) - centroids.row(0)).squaredNorm();
  }
  for (int c = 1; c < n_clusters; ++c) {
    const double total = nearest.sum();
    const double target = Uniform01(rng) * total;
    double acc = 0.0;
    Eigen::Index pick = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (nearest[i] <= 0.0) continue;
      pick = i;
      acc += nearest[i];
      if (acc > target) break;
    }
    centroids.row(c) = points.row(pick);
    for (Eigen::Index i = 0; i < n; ++i) {
      nearest[i] =
          std::min(nearest[i], (points.row(i) - centroids.row(c)).squaredNorm());
    }
  }

  KMeansResult result;
  result.assignment.assign(n, -1);
  std::vector<Eigen::Index> sizes(n_clusters);
  Eigen::VectorXd dist(n);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      ClusterId best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < n_clusters; ++c) {
        const double d = (points.row(i) - centroids.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      dist[i] = best_d;
      if (result.assignment[i] != best) {
        result.assignment[i] = best;
        changed = true;
      }
    }
    result.iterations = iter + 1;
    if (!changed) break;

    centroids.setZero();
    std::fill(sizes.begin(), sizes.end(), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      centroids.row(result.assignment[i]) += points.row(i);
      ++sizes[result.assignment[i]];
    }
    for (int c = 0; c < n_clusters; ++c) {
      if (sizes[c] > 0) {
        centroids.row(c) /= static_cast<double>(sizes[c]);
        continue;
      }
      // Empty cluster: move the point farthest from its centroid into it.
      Eigen::Index far = -1;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (sizes[result.assignment[i]] > 1 && (far < 0 || dist[i] > dist[far])) {
          far = i;
        }
      }
      if (far < 0) continue;
      --sizes[result.assignment[far]];
      result.assignment[far] = c;
      sizes[c] = 1;
      dist[far] = 0.0;
      centroids.row(c) = points.row(far);
    }
    // Centroids of clusters that lost a point to a re-seed are stale by one
    // point; the next assignment pass corrects them.
  }

  result.objective = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    result.objective +=
        (points.row(i) - centroids.row(result.assignment[i])).squaredNorm();
  }
  result.centroids = std::move(centroids);
  return result;
}

Labeling KMeansPP(const Embedding& e, int n_clusters, std::uint64_t seed,
                  NodeId num_nodes) {
  std::vector<Eigen::Index> usable;
  for (Eigen::Index r = 0; r < e.u.rows(); ++r) {
    if (e.flagged.empty() || !e.flagged[r]) usable.push_back(r);
  }
  Eigen::MatrixXd points(static_cast<Eigen::Index>(usable.size()), e.u.cols());
  for (std::size_t p = 0; p < usable.size(); ++p) {
    points.row(static_cast<Eigen::Index>(p)) = e.u.row(usable[p]);
  }
  const KMeansResult km = KMeans(points, n_clusters, seed);
  Labeling labels(num_nodes);
  for (std::size_t p = 0; p < usable.size(); ++p) {
    labels.label[e.row_of[usable[p]]] = km.assignment[p];
  }
  labels.next_label = n_clusters;
  return labels;
}

Labeling SpectralCluster(const WeightMatrix& w, int n_clusters,
                         std::uint64_t seed, const SpectralOptions& options) {
  if (n_clusters < 1) throw ConfigError("n_clusters must be positive");
  const LaplacianPair lp = BuildLaplacian(w);
  if (static_cast<NodeId>(lp.embedded.size()) <= n_clusters) {
    throw DegenerateError("only " + std::to_string(lp.embedded.size()) +
                          " embeddable nodes for " +
                          std::to_string(n_clusters) + " clusters");
  }
  Embedding e = RowNormalize(SmallestEigenvectors(lp, n_clusters, options.eigen));
  return KMeansPP(e, n_clusters, seed, w.n);
}

}  // namespace kcoremotif
