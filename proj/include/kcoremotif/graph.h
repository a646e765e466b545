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

// Directed graph ingestion: SNAP-style edge lists are parsed, stripped of
// self-loops and duplicate arcs, and renumbered into a compact CSR graph.

#ifndef KCOREMOTIF_GRAPH_H_
#define KCOREMOTIF_GRAPH_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kcoremotif {

using NodeId = std::int32_t;
using ExternalId = std::int64_t;

struct RawEdgeList {
  std::vector<std::pair<ExternalId, ExternalId>> edges;
};

// Bijection between the ids found in the input file and the contiguous
// internal indices 0..n-1.
class IdMap {
 public:
  IdMap() = default;
  // `sorted_external` must be strictly increasing.
  explicit IdMap(std::vector<ExternalId> sorted_external);

  std::size_t size() const { return to_external_.size(); }
  ExternalId ToExternal(NodeId i) const { return to_external_.at(i); }
  // Returns -1 for ids that are not mapped.
  NodeId ToInternal(ExternalId x) const;
  const std::vector<ExternalId>& external_ids() const { return to_external_; }

  // "external_id<TAB>internal_index" per line, ordered by internal index.
  void Write(std::ostream& out) const;

 private:
  std::vector<ExternalId> to_external_;
  std::unordered_map<ExternalId, NodeId> to_internal_;
};

// Immutable directed graph with sorted out- and in-adjacency in CSR form.
// No self-loops, no duplicate arcs.
class Graph {
 public:
  Graph() = default;

  // Builds from arcs over 0..n-1. Self-loops and duplicates are dropped.
  static Graph FromEdges(NodeId n,
                         std::vector<std::pair<NodeId, NodeId>> edges);

  NodeId num_nodes() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(out_.size()); }

  std::span<const NodeId> OutNeighbors(NodeId i) const;
  std::span<const NodeId> InNeighbors(NodeId i) const;
  // Sorted, deduplicated union of out- and in-neighbors.
  std::vector<NodeId> AllNeighbors(NodeId i) const;
  // Degree in the undirected simplification: |AllNeighbors(i)|.
  std::int64_t UndirectedDegree(NodeId i) const;

  bool HasEdge(NodeId i, NodeId j) const;

  // All arcs in (source, target) lexicographic order.
  std::vector<std::pair<NodeId, NodeId>> Edges() const;

  // Undirected simplification as a sorted CSR: neighbor lists of every node.
  // Computed once per call; callers that need it repeatedly should keep it.
  struct Undirected {
    std::vector<std::int64_t> offsets;
    std::vector<NodeId> neighbors;
    std::span<const NodeId> Neighbors(NodeId i) const {
      return {neighbors.data() + offsets[i],
              static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
    }
    std::int64_t Degree(NodeId i) const { return offsets[i + 1] - offsets[i]; }
  };
  Undirected ToUndirected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void CheckNode(NodeId i) const;

  NodeId n_ = 0;
  std::vector<std::int64_t> out_offsets_{0};
  std::vector<NodeId> out_;
  std::vector<std::int64_t> in_offsets_{0};
  std::vector<NodeId> in_;
};

// Reads whitespace separated "source target" pairs. Lines starting with '#'
// and blank lines are skipped. Throws ParseError on malformed lines.
RawEdgeList ParseEdgeList(std::istream& in);

struct CleanGraph {
  Graph graph;
  IdMap ids;
};

// Drops self-loops, merges duplicate arcs and renumbers surviving ids in
// ascending external order. Throws DataError if no edge survives.
CleanGraph Clean(const RawEdgeList& raw);

// Convenience: ParseEdgeList + Clean on a file path.
CleanGraph LoadGraph(const std::string& path);

}  // namespace kcoremotif

#endif  // KCOREMOTIF_GRAPH_H_
