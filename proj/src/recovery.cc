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

#include "kcoremotif/recovery.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "kcoremotif/errors.h"

namespace kcoremotif {

Labeling RecoverLabels(const Graph& g, const CorenessMap& c, Labeling partial,
                       const RecoveryConfig& cfg, RecoveryTrace* trace) {
  if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0)) {
    throw ConfigError("recovery threshold must lie in [0, 1], got " +
                      std::to_string(cfg.threshold));
  }
  const NodeId n = g.num_nodes();
  if (partial.size() != n || c.size() != n) {
    throw ConfigError("labeling/coreness size does not match the graph");
  }

  std::vector<NodeId> pending;
  ClusterId max_label = -1;
  for (NodeId i = 0; i < n; ++i) {
    if (partial.IsLabeled(i)) {
      max_label = std::max(max_label, partial.label[i]);
    } else {
      pending.push_back(i);
    }
  }
  if (pending.size() == static_cast<std::size_t>(n)) {
    throw DataError("label recovery needs at least one labeled node");
  }
  partial.next_label = std::max(partial.next_label, max_label + 1);

  // Stable sort keeps ascending index order within a shell.
  std::stable_sort(pending.begin(), pending.end(), [&](NodeId a, NodeId b) {
    return c.core[a] > c.core[b];
  });

  std::unordered_map<ClusterId, std::int64_t> votes;
  for (NodeId v : pending) {
    if (trace != nullptr) trace->order.push_back(v);
    const std::vector<NodeId> neighbors = g.AllNeighbors(v);
    votes.clear();
    std::int64_t labeled = 0;
    for (NodeId w : neighbors) {
      if (partial.IsLabeled(w)) {
        ++votes[partial.label[w]];
        ++labeled;
      }
    }

    ClusterId top = Labeling::kUnlabeled;
    std::int64_t top_votes = 0;
    for (const auto& [label, count] : votes) {
      if (count > top_votes || (count == top_votes && label < top)) {
        top = label;
        top_votes = count;
      }
    }

    const std::int64_t denominator =
        cfg.base == ShareBase::kLabeledNeighbors
            ? labeled
            : static_cast<std::int64_t>(neighbors.size());
    const bool accept =
        top_votes > 0 &&
        static_cast<double>(top_votes) >=
            cfg.threshold * static_cast<double>(denominator);
    partial.label[v] = accept ? top : partial.next_label++;
  }
  return partial;
}

}  // namespace kcoremotif
