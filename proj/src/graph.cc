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

#include "kcoremotif/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kcoremotif/errors.h"

namespace kcoremotif {

namespace {

// Counting-sort style CSR build; `edges` must already be sorted and unique.
void BuildCsr(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges,
              bool by_target, std::vector<std::int64_t>& offsets,
              std::vector<NodeId>& adj) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [s, t] : edges) ++offsets[(by_target ? t : s) + 1];
  for (NodeId i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  adj.resize(edges.size());
  std::vector<std::int64_t> cursor(offsets.begin(), offsets.end() - 1);
  // Edges are sorted by (source, target), so filling the in-lists in this
  // order leaves each of them sorted by source as well.
  for (const auto& [s, t] : edges) {
    if (by_target) {
      adj[cursor[t]++] = s;
    } else {
      adj[cursor[s]++] = t;
    }
  }
}

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\v\f") == std::string_view::npos;
}

}  // namespace

IdMap::IdMap(std::vector<ExternalId> sorted_external)
    : to_external_(std::move(sorted_external)) {
  to_internal_.reserve(to_external_.size());
  for (std::size_t i = 0; i < to_external_.size(); ++i) {
    to_internal_.emplace(to_external_[i], static_cast<NodeId>(i));
  }
}

NodeId IdMap::ToInternal(ExternalId x) const {
  auto it = to_internal_.find(x);
  return it == to_internal_.end() ? -1 : it->second;
}

void IdMap::Write(std::ostream& out) const {
  for (std::size_t i = 0; i < to_external_.size(); ++i) {
    out << to_external_[i] << '\t' << i << '\n';
  }
}

Graph Graph::FromEdges(NodeId n,
                       std::vector<std::pair<NodeId, NodeId>> edges) {
  for (const auto& [s, t] : edges) {
    if (s < 0 || s >= n || t < 0 || t >= n) {
      throw std::out_of_range("edge endpoint outside [0, n)");
    }
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  BuildCsr(n, edges, /*by_target=*/false, g.out_offsets_, g.out_);
  BuildCsr(n, edges, /*by_target=*/true, g.in_offsets_, g.in_);
  return g;
}

void Graph::CheckNode(NodeId i) const {
  if (i < 0 || i >= n_) {
    throw std::out_of_range("node index " + std::to_string(i) +
                            " out of range [0, " + std::to_string(n_) + ")");
  }
}

std::span<const NodeId> Graph::OutNeighbors(NodeId i) const {
  CheckNode(i);
  return {out_.data() + out_offsets_[i],
          static_cast<std::size_t>(out_offsets_[i + 1] - out_offsets_[i])};
}

std::span<const NodeId> Graph::InNeighbors(NodeId i) const {
  CheckNode(i);
  return {in_.data() + in_offsets_[i],
          static_cast<std::size_t>(in_offsets_[i + 1] - in_offsets_[i])};
}

std::vector<NodeId> Graph::AllNeighbors(NodeId i) const {
  auto out = OutNeighbors(i);
  auto in = InNeighbors(i);
  std::vector<NodeId> result;
  result.reserve(out.size() + in.size());
  std::set_union(out.begin(), out.end(), in.begin(), in.end(),
                 std::back_inserter(result));
  return result;
}

std::int64_t Graph::UndirectedDegree(NodeId i) const {
  auto out = OutNeighbors(i);
  auto in = InNeighbors(i);
  // |A ∪ B| = |A| + |B| - |A ∩ B| on sorted ranges.
  std::int64_t common = 0;
  auto a = out.begin();
  auto b = in.begin();
  while (a != out.end() && b != in.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++common;
      ++a;
      ++b;
    }
  }
  return static_cast<std::int64_t>(out.size() + in.size()) - common;
}

bool Graph::HasEdge(NodeId i, NodeId j) const {
  auto out = OutNeighbors(i);
  return std::binary_search(out.begin(), out.end(), j);
}

std::vector<std::pair<NodeId, NodeId>> Graph::Edges() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(out_.size());
  for (NodeId i = 0; i < n_; ++i) {
    for (NodeId j : OutNeighbors(i)) edges.emplace_back(i, j);
  }
  return edges;
}

Graph::Undirected Graph::ToUndirected() const {
  Undirected u;
  u.offsets.assign(static_cast<std::size_t>(n_) + 1, 0);
  u.neighbors.reserve(out_.size() * 2);
  for (NodeId i = 0; i < n_; ++i) {
    auto out = OutNeighbors(i);
    auto in = InNeighbors(i);
    std::set_union(out.begin(), out.end(), in.begin(), in.end(),
                   std::back_inserter(u.neighbors));
    u.offsets[i + 1] = static_cast<std::int64_t>(u.neighbors.size());
  }
  return u;
}

RawEdgeList ParseEdgeList(std::istream& in) {
  RawEdgeList raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    if (IsBlank(line)) continue;

    ExternalId ids[2];
    int count = 0;
    std::size_t pos = 0;
    while (true) {
      pos = line.find_first_not_of(" \t\r\v\f", pos);
      if (pos == std::string::npos) break;
      std::size_t end = line.find_first_of(" \t\r\v\f", pos);
      if (end == std::string::npos) end = line.size();
      if (count == 2) {
        throw ParseError(line_no, "expected 2 tokens, found more");
      }
      const char* first = line.data() + pos;
      const char* last = line.data() + end;
      ExternalId value = 0;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || value < 0) {
        throw ParseError(line_no, "token '" + std::string(first, last) +
                                      "' is not a nonnegative integer");
      }
      ids[count++] = value;
      pos = end;
    }
    if (count != 2) {
      throw ParseError(line_no, "expected 2 tokens, found " +
                                    std::to_string(count));
    }
    raw.edges.emplace_back(ids[0], ids[1]);
  }
  return raw;
}

CleanGraph Clean(const RawEdgeList& raw) {
  std::vector<ExternalId> ids;
  ids.reserve(raw.edges.size() * 2);
  for (const auto& [s, t] : raw.edges) {
    if (s == t) continue;
    ids.push_back(s);
    ids.push_back(t);
  }
  if (ids.empty()) {
    throw DataError("empty graph: no edges remain after removing self-loops");
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() >
      static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
    throw DataError("graph has too many nodes");
  }

  IdMap map(std::move(ids));
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.edges.size());
  for (const auto& [s, t] : raw.edges) {
    if (s == t) continue;
    edges.emplace_back(map.ToInternal(s), map.ToInternal(t));
  }
  auto n = static_cast<NodeId>(map.size());
  return CleanGraph{Graph::FromEdges(n, std::move(edges)), std::move(map)};
}

CleanGraph LoadGraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return Clean(ParseEdgeList(in));
}

}  // namespace kcoremotif
