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

#ifndef KCOREMOTIF_LANCZOS_H_
#define KCOREMOTIF_LANCZOS_H_

#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace kcoremotif {

// y = A x for a symmetric operator A.
using MatVec = std::function<void(const Eigen::VectorXd& x, Eigen::VectorXd& y)>;

struct LanczosOptions {
  // Ritz residual ||A v - theta v|| at which a pair counts as converged.
  double tolerance = 1e-10;
  // Restart budget is restarts_per_eigenpair * nev.
  int restarts_per_eigenpair = 30;
  // Subspace dimension; 0 picks max(2 * nev + 10, 20).
  int subspace = 0;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct LanczosResult {
  Eigen::VectorXd values;   // nonincreasing
  Eigen::MatrixXd vectors;  // orthonormal columns
  Eigen::VectorXd residual_estimates;
  int restarts = 0;
  bool converged = false;
};

// Largest `nev` eigenpairs of the symmetric operator `op` of dimension `n`,
// restricted to the orthogonal complement of `locked` (which may have zero
// columns). Thick-restart Lanczos with full reorthogonalization; breakdowns
// continue from a fresh random direction so repeated eigenvalues are found.
LanczosResult LargestEigenpairs(const MatVec& op, Eigen::Index n, int nev,
                                const LanczosOptions& options,
                                const Eigen::MatrixXd& locked = {});

}  // namespace kcoremotif

#endif  // KCOREMOTIF_LANCZOS_H_
