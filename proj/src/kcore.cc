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

#include "kcoremotif/kcore.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kcoremotif/errors.h"

namespace kcoremotif {

std::int32_t CorenessMap::MaxCore() const {
  return core.empty() ? 0 : *std::max_element(core.begin(), core.end());
}

void CorenessMap::Write(std::ostream& out) const {
  for (std::size_t i = 0; i < core.size(); ++i) {
    out << i << '\t' << core[i] << '\n';
  }
}

// Batagelj-Zaversnik peeling. `vert` holds nodes sorted by current degree,
// `bin[d]` is the first position of degree d in `vert` and `pos` is the
// inverse permutation. Decrementing a neighbor swaps it to the front of its
// bin, so the whole run is linear in n + m.
CorenessMap Coreness(const Graph& g) {
  const NodeId n = g.num_nodes();
  const Graph::Undirected u = g.ToUndirected();

  std::vector<std::int64_t> deg(n);
  std::int64_t max_deg = 0;
  for (NodeId i = 0; i < n; ++i) {
    deg[i] = u.Degree(i);
    max_deg = std::max(max_deg, deg[i]);
  }

  std::vector<std::int64_t> bin(max_deg + 1, 0);
  for (NodeId i = 0; i < n; ++i) ++bin[deg[i]];
  std::int64_t start = 0;
  for (std::int64_t d = 0; d <= max_deg; ++d) {
    std::int64_t count = bin[d];
    bin[d] = start;
    start += count;
  }

  // Filling in index order keeps each bin sorted by node index initially.
  std::vector<NodeId> vert(n);
  std::vector<std::int64_t> pos(n);
  for (NodeId i = 0; i < n; ++i) {
    pos[i] = bin[deg[i]]++;
    vert[pos[i]] = i;
  }
  for (std::int64_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::int64_t p = 0; p < n; ++p) {
    const NodeId v = vert[p];
    for (NodeId w : u.Neighbors(v)) {
      if (deg[w] > deg[v]) {
        const std::int64_t dw = deg[w];
        const std::int64_t pw = pos[w];
        const std::int64_t front = bin[dw];
        const NodeId first = vert[front];
        if (first != w) {
          pos[w] = front;
          vert[pw] = first;
          pos[first] = pw;
          vert[front] = w;
        }
        ++bin[dw];
        --deg[w];
      }
    }
  }

  CorenessMap c;
  c.core.resize(n);
  for (NodeId i = 0; i < n; ++i) c.core[i] = static_cast<std::int32_t>(deg[i]);
  return c;
}

namespace {

template <typename Pred>
std::vector<NodeId> Select(const CorenessMap& c, Pred pred) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < c.size(); ++i) {
    if (pred(c.core[i])) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<NodeId> KCoreNodes(const CorenessMap& c, std::int32_t k) {
  return Select(c, [k](std::int32_t x) { return x >= k; });
}

std::vector<NodeId> KCrustNodes(const CorenessMap& c, std::int32_t k) {
  return Select(c, [k](std::int32_t x) { return x < k; });
}

std::vector<NodeId> ShellNodes(const CorenessMap& c, std::int32_t k) {
  return Select(c, [k](std::int32_t x) { return x == k; });
}

double RetainedFraction(const CorenessMap& c, std::int32_t k) {
  if (c.core.empty()) return 0.0;
  auto kept = std::count_if(c.core.begin(), c.core.end(),
                            [k](std::int32_t x) { return x >= k; });
  return static_cast<double>(kept) / static_cast<double>(c.core.size());
}

Subgraph InducedSubgraph(const Graph& g, std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.empty()) throw DataError("empty subgraph: node set is empty");
  if (nodes.front() < 0 || nodes.back() >= g.num_nodes()) {
    throw std::out_of_range("subgraph node outside the parent graph");
  }

  std::vector<NodeId> local(g.num_nodes(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    local[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v : nodes) {
    for (NodeId w : g.OutNeighbors(v)) {
      if (local[w] >= 0) edges.emplace_back(local[v], local[w]);
    }
  }
  Subgraph sub;
  sub.graph = Graph::FromEdges(static_cast<NodeId>(nodes.size()),
                               std::move(edges));
  sub.parent_index = std::move(nodes);
  return sub;
}

}  // namespace kcoremotif
