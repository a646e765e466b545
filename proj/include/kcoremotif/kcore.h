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

#ifndef KCOREMOTIF_KCORE_H_
#define KCOREMOTIF_KCORE_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "kcoremotif/graph.h"

namespace kcoremotif {

// Core number of every node of the undirected simplification.
struct CorenessMap {
  std::vector<std::int32_t> core;

  NodeId size() const { return static_cast<NodeId>(core.size()); }
  std::int32_t MaxCore() const;

  // "internal_index<TAB>coreness" per line.
  void Write(std::ostream& out) const;
};

// A node-induced subgraph with its local -> parent index mapping.
struct Subgraph {
  std::vector<NodeId> parent_index;  // strictly increasing
  Graph graph;
};

// Bucket-based peeling in O(n + m). Among nodes of equal current degree the
// lowest index is removed first.
CorenessMap Coreness(const Graph& g);

// {i : core[i] >= k}, ascending.
std::vector<NodeId> KCoreNodes(const CorenessMap& c, std::int32_t k);
// {i : core[i] < k}, ascending.
std::vector<NodeId> KCrustNodes(const CorenessMap& c, std::int32_t k);
// {i : core[i] == k}, ascending.
std::vector<NodeId> ShellNodes(const CorenessMap& c, std::int32_t k);

// Fraction of nodes in the k-core.
double RetainedFraction(const CorenessMap& c, std::int32_t k);

// Subgraph induced by `nodes` (any order, duplicates ignored). Throws
// DataError for an empty node set and std::out_of_range for bad indices.
Subgraph InducedSubgraph(const Graph& g, std::vector<NodeId> nodes);

}  // namespace kcoremotif

#endif  // KCOREMOTIF_KCORE_H_
