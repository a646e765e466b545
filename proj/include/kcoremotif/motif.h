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

// Motif adjacency for the seven directed triangle motifs.
//
//   M1  i->j->k->i                     (pure cycle)
//   M2  i<->j, j->k, k->i              (one reciprocal pair, cyclic)
//   M3  i<->j, j<->k, plus i->k        (two reciprocal pairs)
//   M4  i<->j, j<->k, k<->i            (all reciprocal)
//   M5  i->j, j->k, i->k               (feed-forward)
//   M6  k->i, k->j, i<->j              (source into a reciprocal pair)
//   M7  i->k, j->k, i<->j              (reciprocal pair into a sink)
//
// W[i][j] counts the induced instances of the motif that contain both i and
// j. The fast path uses masked sparse products over the reciprocal (B) and
// one-way (U) parts of the adjacency matrix.

#ifndef KCOREMOTIF_MOTIF_H_
#define KCOREMOTIF_MOTIF_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "kcoremotif/graph.h"
#include "kcoremotif/sparse.h"

namespace kcoremotif {

enum class MotifType { kM1 = 1, kM2, kM3, kM4, kM5, kM6, kM7 };

inline constexpr std::array<MotifType, 7> kAllMotifs = {
    MotifType::kM1, MotifType::kM2, MotifType::kM3, MotifType::kM4,
    MotifType::kM5, MotifType::kM6, MotifType::kM7};

inline constexpr MotifType kDefaultMotif = MotifType::kM6;

// "M1".."M7" (case-insensitive). Throws ConfigError otherwise.
MotifType ParseMotif(std::string_view tag);
std::string MotifName(MotifType m);

using MotifMatrix = CsrMatrix<std::int64_t>;

struct EdgeSplit {
  SparsePattern bidir;   // B = min(A, A^T)
  SparsePattern unidir;  // U = A - B
};

EdgeSplit SplitEdges(const Graph& g);

struct MotifOptions {
  int workers = 1;
};

MotifMatrix MotifAdjacency(const Graph& g, MotifType m,
                           const MotifOptions& options = {});

inline constexpr NodeId kDefaultOracleBound = 500;

// Enumerates every node triple and classifies its induced subgraph up to
// isomorphism. O(n^3); refuses graphs above `max_nodes` with ConfigError.
MotifMatrix BruteForceMotifCount(const Graph& g, MotifType m,
                                 NodeId max_nodes = kDefaultOracleBound);

}  // namespace kcoremotif

#endif  // KCOREMOTIF_MOTIF_H_
