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

// End-to-end clustering with per-stage timings.
//
//   kcoremotif:    coreness -> k -> top k-core subgraph -> motif adjacency
//                  -> spectral clustering -> shell-by-shell label recovery
//   motif:         motif adjacency of the whole graph -> spectral clustering
//   conventional:  max(A, A^T) -> spectral clustering
//
// The baselines send nodes the spectral stage could not embed through the
// same recovery pass, timed as part of clustering.

#ifndef KCOREMOTIF_PIPELINE_H_
#define KCOREMOTIF_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kcoremotif/graph.h"
#include "kcoremotif/motif.h"
#include "kcoremotif/quality.h"
#include "kcoremotif/recovery.h"
#include "kcoremotif/spectral.h"

namespace kcoremotif {

enum class Algorithm { kConventional, kMotif, kKCoreMotif };

Algorithm ParseAlgorithm(std::string_view name);
std::string AlgorithmName(Algorithm a);

struct PipelineConfig {
  std::string dataset;
  Algorithm algorithm = Algorithm::kKCoreMotif;
  MotifType motif = kDefaultMotif;
  std::optional<std::int32_t> k;  // empty = select automatically
  int n_clusters = 0;
  RecoveryConfig recovery;
  std::uint64_t seed = 0;
  int workers = 1;
  SpectralOptions spectral;
};

// Runs the configured algorithm. `report` is filled stage by stage, so on an
// exception it still carries the timings of the stages that completed.
Labeling TimedPipeline(const Graph& g, const PipelineConfig& cfg,
                       ClusterReport& report);

}  // namespace kcoremotif

#endif  // KCOREMOTIF_PIPELINE_H_
