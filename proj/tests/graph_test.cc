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

#include <set>
#include <sstream>
#include <stdexcept>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kcoremotif/errors.h"
#include "test_util.h"

namespace kcoremotif {
namespace {

using ::testing::ElementsAre;
using ::testing::ElementsAreArray;
using ::testing::HasSubstr;

std::vector<NodeId> V(std::span<const NodeId> s) { return {s.begin(), s.end()}; }

RawEdgeList Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseEdgeList(in);
}

TEST(ParseEdgeListTest, SkipsCommentsAndBlankLines) {
  const RawEdgeList raw = Parse("# hdr\n0 1\n1 2\n");
  EXPECT_THAT(raw.edges, ElementsAre(std::pair<ExternalId, ExternalId>{0, 1},
                                     std::pair<ExternalId, ExternalId>{1, 2}));
  EXPECT_EQ(Parse("\n# a\n\n  \t\n3\t4\n").edges.size(), 1u);
}

TEST(ParseEdgeListTest, KeepsSelfLoops) {
  const RawEdgeList raw = Parse("5   5\n");
  EXPECT_THAT(raw.edges, ElementsAre(std::pair<ExternalId, ExternalId>{5, 5}));
}

TEST(ParseEdgeListTest, AcceptsMixedWhitespaceAndLargeIds) {
  const RawEdgeList raw = Parse("1\t 9223372036854775807\r\n");
  ASSERT_EQ(raw.edges.size(), 1u);
  EXPECT_EQ(raw.edges[0].second, 9223372036854775807LL);
}

TEST(ParseEdgeListTest, MalformedLinesNameTheLine) {
  try {
    Parse("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_THAT(e.what(), HasSubstr("line 2"));
  }
  EXPECT_THROW(Parse("0 1 2\n"), ParseError);
  EXPECT_THROW(Parse("7\n"), ParseError);
  EXPECT_THROW(Parse("-1 2\n"), ParseError);
  EXPECT_THROW(Parse("1.5 2\n"), ParseError);
}

TEST(CleanTest, DropsSelfLoopsAndMergesDuplicates) {
  RawEdgeList raw{{{0, 1}, {1, 0}, {2, 2}, {0, 1}}};
  const CleanGraph c = Clean(raw);
  EXPECT_EQ(c.graph.num_nodes(), 2);
  EXPECT_EQ(c.graph.num_edges(), 2);
  EXPECT_TRUE(c.graph.HasEdge(0, 1));
  EXPECT_TRUE(c.graph.HasEdge(1, 0));
  EXPECT_EQ(c.ids.ToInternal(0), 0);
  EXPECT_EQ(c.ids.ToInternal(1), 1);
  EXPECT_EQ(c.ids.ToInternal(2), -1);
}

TEST(CleanTest, RenumbersInAscendingExternalOrder) {
  RawEdgeList raw{{{20, 30}, {10, 20}}};
  const CleanGraph c = Clean(raw);
  EXPECT_EQ(c.graph.num_nodes(), 3);
  EXPECT_THAT(c.graph.Edges(),
              ElementsAre(std::pair<NodeId, NodeId>{0, 1},
                          std::pair<NodeId, NodeId>{1, 2}));
  EXPECT_THAT(c.ids.external_ids(), ElementsAre(10, 20, 30));
}

TEST(CleanTest, EmptyAfterCleanupIsAnError) {
  EXPECT_THROW(Clean(RawEdgeList{}), DataError);
  EXPECT_THROW(Clean(RawEdgeList{{{4, 4}}}), DataError);
}

TEST(CleanTest, IsIdempotent) {
  const auto edges = testing::RandomDigraphEdges(40, 0.1, 11);
  RawEdgeList raw;
  for (auto [s, t] : edges) raw.edges.emplace_back(s * 7 + 3, t * 7 + 3);
  const CleanGraph once = Clean(raw);
  RawEdgeList again;
  for (auto [s, t] : once.graph.Edges()) {
    again.edges.emplace_back(once.ids.ToExternal(s), once.ids.ToExternal(t));
  }
  const CleanGraph twice = Clean(again);
  EXPECT_EQ(once.graph, twice.graph);
  EXPECT_EQ(once.ids.external_ids(), twice.ids.external_ids());
}

TEST(IdMapTest, RoundTripAndSidecarFormat) {
  RawEdgeList raw{{{100, 7}, {7, 55}}};
  const CleanGraph c = Clean(raw);
  for (NodeId i = 0; i < c.graph.num_nodes(); ++i) {
    EXPECT_EQ(c.ids.ToInternal(c.ids.ToExternal(i)), i);
  }
  std::ostringstream out;
  c.ids.Write(out);
  EXPECT_EQ(out.str(), "7\t0\n55\t1\n100\t2\n");
}

TEST(GraphTest, NeighborQueries) {
  const Graph g = Graph::FromEdges(3, {{0, 1}, {2, 0}});
  EXPECT_THAT(V(g.OutNeighbors(0)), ElementsAre(1));
  EXPECT_THAT(V(g.InNeighbors(0)), ElementsAre(2));
  EXPECT_THAT(g.AllNeighbors(0), ElementsAre(1, 2));
  EXPECT_EQ(g.UndirectedDegree(0), 2);

  const Graph pair = Graph::FromEdges(2, {{0, 1}, {1, 0}});
  EXPECT_THAT(pair.AllNeighbors(0), ElementsAre(1));
  EXPECT_EQ(pair.UndirectedDegree(0), 1);
}

TEST(GraphTest, IsolatedNodeHasDegreeZero) {
  const Graph g = Graph::FromEdges(3, {{0, 1}});
  EXPECT_EQ(g.UndirectedDegree(2), 0);
  EXPECT_TRUE(g.AllNeighbors(2).empty());
}

TEST(GraphTest, OutOfRangeIsABoundsError) {
  const Graph g = Graph::FromEdges(2, {{0, 1}});
  EXPECT_THROW(g.OutNeighbors(2), std::out_of_range);
  EXPECT_THROW(g.InNeighbors(-1), std::out_of_range);
  EXPECT_THROW(g.AllNeighbors(5), std::out_of_range);
  EXPECT_THROW(g.UndirectedDegree(2), std::out_of_range);
}

// Neighbor sets and degrees against a naive scan of the raw edge list.
TEST(GraphTest, MatchesNaiveScanOnRandomDigraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const NodeId n = 30 + static_cast<NodeId>(seed);
    const auto edges = testing::RandomDigraphEdges(n, 0.08, seed);
    const Graph g = Graph::FromEdges(n, edges);
    const auto naive = testing::NaiveUndirected(n, edges);
    std::int64_t out_total = 0;
    std::int64_t in_total = 0;
    for (NodeId i = 0; i < n; ++i) {
      std::vector<NodeId> expected(naive[i].begin(), naive[i].end());
      EXPECT_THAT(g.AllNeighbors(i), ElementsAreArray(expected));
      EXPECT_EQ(g.UndirectedDegree(i), static_cast<std::int64_t>(expected.size()));
      out_total += static_cast<std::int64_t>(g.OutNeighbors(i).size());
      in_total += static_cast<std::int64_t>(g.InNeighbors(i).size());
      auto out = g.OutNeighbors(i);
      EXPECT_TRUE(std::adjacent_find(out.begin(), out.end(),
                                     std::greater_equal<>()) == out.end());
      for (NodeId j : out) {
        EXPECT_NE(i, j);
        auto in = g.InNeighbors(j);
        EXPECT_TRUE(std::binary_search(in.begin(), in.end(), i));
      }
    }
    EXPECT_EQ(out_total, g.num_edges());
    EXPECT_EQ(in_total, g.num_edges());
    std::set<std::pair<NodeId, NodeId>> unique(edges.begin(), edges.end());
    EXPECT_EQ(g.num_edges(), static_cast<std::int64_t>(unique.size()));
  }
}

}  // namespace
}  // namespace kcoremotif
