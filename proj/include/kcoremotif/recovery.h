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

#ifndef KCOREMOTIF_RECOVERY_H_
#define KCOREMOTIF_RECOVERY_H_

#include <vector>

#include "kcoremotif/graph.h"
#include "kcoremotif/kcore.h"
#include "kcoremotif/spectral.h"

namespace kcoremotif {

enum class ShareBase {
  // share = votes / labeled neighbors (default)
  kLabeledNeighbors,
  // share = votes / all neighbors
  kAllNeighbors,
};

struct RecoveryConfig {
  double threshold = 0.5;  // in [0, 1]; compared with >=
  ShareBase base = ShareBase::kLabeledNeighbors;
};

// Optional instrumentation of a recovery pass.
struct RecoveryTrace {
  std::vector<NodeId> order;  // nodes in processing order
};

// Single ordered pass over the unlabeled nodes, highest coreness first (ties
// by node index). Each node takes the most frequent label among its already
// labeled neighbors (smallest id on ties) when that label's share reaches
// the threshold, and a fresh cluster id otherwise. Throws ConfigError for a
// threshold outside [0, 1] and DataError when nothing is labeled.
Labeling RecoverLabels(const Graph& g, const CorenessMap& c, Labeling partial,
                       const RecoveryConfig& cfg = {},
                       RecoveryTrace* trace = nullptr);

}  // namespace kcoremotif

#endif  // KCOREMOTIF_RECOVERY_H_
