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

#include "kcoremotif/lanczos.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace kcoremotif {

namespace {

// Uniform in [-1, 1) from raw 64-bit draws; independent of the standard
// library's distribution implementations.
void FillRandom(std::mt19937_64& rng, Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v[i] = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
  }
}

// Two passes of classical Gram-Schmidt against `basis`. Returns the
// accumulated coefficients.
Eigen::VectorXd Orthogonalize(const Eigen::Ref<const Eigen::MatrixXd>& basis,
                              Eigen::VectorXd& w) {
  Eigen::VectorXd h = Eigen::VectorXd::Zero(basis.cols());
  if (basis.cols() == 0) return h;
  for (int pass = 0; pass < 2; ++pass) {
    Eigen::VectorXd c = basis.transpose() * w;
    w.noalias() -= basis * c;
    h += c;
  }
  return h;
}

void Deflate(const Eigen::MatrixXd& locked, Eigen::VectorXd& w) {
  if (locked.cols() == 0) return;
  for (int pass = 0; pass < 2; ++pass) {
    Eigen::VectorXd c = locked.transpose() * w;
    w.noalias() -= locked * c;
  }
}

// A random unit vector orthogonal to `locked` and `basis`, or a zero vector
// when that complement is numerically empty.
Eigen::VectorXd FreshDirection(std::mt19937_64& rng, Eigen::Index n,
                               const Eigen::MatrixXd& locked,
                               const Eigen::Ref<const Eigen::MatrixXd>& basis) {
  Eigen::VectorXd v(n);
  for (int attempt = 0; attempt < 3; ++attempt) {
    FillRandom(rng, v);
    Deflate(locked, v);
    Orthogonalize(basis, v);
    Deflate(locked, v);
    const double norm = v.norm();
    if (norm > 1e-8 * std::sqrt(static_cast<double>(n))) return v / norm;
  }
  return Eigen::VectorXd::Zero(n);
}

}  // namespace

LanczosResult LargestEigenpairs(const MatVec& op, Eigen::Index n, int nev,
                                const LanczosOptions& options,
                                const Eigen::MatrixXd& locked) {
  const Eigen::Index available = n - locked.cols();
  if (nev < 1 || nev > available) {
    throw std::invalid_argument("LargestEigenpairs: nev out of range");
  }
  int m = options.subspace > 0 ? options.subspace : std::max(2 * nev + 10, 20);
  m = static_cast<int>(std::min<Eigen::Index>(m, available));
  m = std::max(m, nev);
  const int keep = std::min(nev + (m - nev) / 2, m - 1);
  const int max_restarts = options.restarts_per_eigenpair * nev;

  std::mt19937_64 rng(options.seed);
  Eigen::MatrixXd basis(n, m + 1);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  basis.col(0) = FreshDirection(rng, n, locked, basis.leftCols(0));

  LanczosResult result;
  Eigen::VectorXd w(n);
  int start = 0;
  double beta = 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz;
  std::vector<int> order(m);

  for (int restart = 0;; ++restart) {
    for (int j = start; j < m; ++j) {
      op(basis.col(j), w);
      Deflate(locked, w);
      // Full projection onto the current basis gives column j of V^T A V,
      // including the arrowhead entries left by a thick restart.
      Eigen::VectorXd h = Orthogonalize(basis.leftCols(j + 1), w);
      t.col(j).head(j + 1) = h;
      t.row(j).head(j + 1) = h.transpose();
      beta = w.norm();
      if (beta > 1e-12) {
        basis.col(j + 1) = w / beta;
      } else {
        // Invariant subspace found. Carry on in a new direction; beta = 0
        // keeps the Ritz residual estimates exact.
        beta = 0.0;
        basis.col(j + 1) = j + 1 < available
                               ? FreshDirection(rng, n, locked,
                                                basis.leftCols(j + 1))
                               : Eigen::VectorXd::Zero(n);
      }
    }

    ritz.compute(t);
    // Eigen sorts ascending; we want the largest first.
    for (int i = 0; i < m; ++i) order[i] = m - 1 - i;
    const Eigen::VectorXd& theta = ritz.eigenvalues();
    const Eigen::MatrixXd& s = ritz.eigenvectors();

    bool converged = true;
    Eigen::VectorXd res(nev);
    for (int i = 0; i < nev; ++i) {
      res[i] = std::abs(beta * s(m - 1, order[i]));
      if (res[i] > options.tolerance) converged = false;
    }
    result.restarts = restart;

    if (converged || restart >= max_restarts || keep < nev) {
      result.converged = converged;
      result.values.resize(nev);
      Eigen::MatrixXd selected(m, nev);
      for (int i = 0; i < nev; ++i) {
        result.values[i] = theta[order[i]];
        selected.col(i) = s.col(order[i]);
      }
      result.vectors = basis.leftCols(m) * selected;
      result.residual_estimates = res;
      return result;
    }

    Eigen::MatrixXd selected(m, keep);
    for (int i = 0; i < keep; ++i) selected.col(i) = s.col(order[i]);
    Eigen::MatrixXd kept = basis.leftCols(m) * selected;
    basis.col(keep) = basis.col(m);
    basis.leftCols(keep) = kept;
    t.setZero();
    for (int i = 0; i < keep; ++i) t(i, i) = theta[order[i]];
    start = keep;
  }
}

}  // namespace kcoremotif
