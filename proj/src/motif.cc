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

#include "kcoremotif/motif.h"

#include <algorithm>
#include <cctype>
#include <vector>

#include "kcoremotif/errors.h"
#include "kcoremotif/parallel.h"

namespace kcoremotif {

SparsePattern SparsePattern::Transpose() const {
  SparsePattern t;
  t.n = n;
  t.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId j : cols) ++t.offsets[j + 1];
  for (NodeId i = 0; i < n; ++i) t.offsets[i + 1] += t.offsets[i];
  t.cols.resize(cols.size());
  std::vector<std::int64_t> cursor(t.offsets.begin(), t.offsets.end() - 1);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : Row(i)) t.cols[cursor[j]++] = i;
  }
  return t;
}

SparsePattern SparsePattern::FromPairs(
    NodeId n, std::vector<std::pair<NodeId, NodeId>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  SparsePattern p;
  p.n = n;
  p.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  p.cols.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    ++p.offsets[i + 1];
    p.cols.push_back(j);
  }
  for (NodeId i = 0; i < n; ++i) p.offsets[i + 1] += p.offsets[i];
  return p;
}

MotifType ParseMotif(std::string_view tag) {
  if (tag.size() == 2 && std::toupper(static_cast<unsigned char>(tag[0])) == 'M' &&
      tag[1] >= '1' && tag[1] <= '7') {
    return static_cast<MotifType>(tag[1] - '0');
  }
  throw ConfigError("unsupported motif '" + std::string(tag) +
                    "' (expected M1..M7)");
}

std::string MotifName(MotifType m) {
  return "M" + std::to_string(static_cast<int>(m));
}

EdgeSplit SplitEdges(const Graph& g) {
  const NodeId n = g.num_nodes();
  EdgeSplit split;
  split.bidir.n = n;
  split.unidir.n = n;
  split.bidir.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  split.unidir.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    auto out = g.OutNeighbors(i);
    auto in = g.InNeighbors(i);
    // Out-neighbors that are also in-neighbors form reciprocal pairs.
    auto b = in.begin();
    for (NodeId j : out) {
      while (b != in.end() && *b < j) ++b;
      if (b != in.end() && *b == j) {
        split.bidir.cols.push_back(j);
      } else {
        split.unidir.cols.push_back(j);
      }
    }
    split.bidir.offsets[i + 1] = split.bidir.nnz();
    split.unidir.offsets[i + 1] = split.unidir.nnz();
  }
  return split;
}

namespace {

enum class Operand { kB, kU, kUt };

Operand TransposeOf(Operand op) {
  switch (op) {
    case Operand::kB:
      return Operand::kB;
    case Operand::kU:
      return Operand::kUt;
    case Operand::kUt:
      return Operand::kU;
  }
  return op;
}

// One summand (X * Y) .* Mask of a motif formula.
struct Term {
  Operand x;
  Operand y;
  Operand mask;
};

struct Formula {
  std::vector<Term> terms;
  bool add_transpose;  // W = C + C^T instead of W = C
};

Formula FormulaFor(MotifType m) {
  using enum Operand;
  switch (m) {
    case MotifType::kM1:
      return {{{kU, kU, kUt}}, true};
    case MotifType::kM2:
      return {{{kB, kU, kUt}, {kU, kB, kUt}, {kU, kU, kB}}, true};
    case MotifType::kM3:
      return {{{kB, kB, kU}, {kB, kU, kB}, {kU, kB, kB}}, true};
    case MotifType::kM4:
      return {{{kB, kB, kB}}, false};
    case MotifType::kM5:
      return {{{kU, kU, kU}, {kUt, kU, kU}, {kU, kUt, kU}}, true};
    case MotifType::kM6:
      return {{{kU, kB, kU}, {kB, kUt, kUt}, {kUt, kU, kB}}, false};
    case MotifType::kM7:
      return {{{kUt, kB, kUt}, {kB, kU, kU}, {kU, kUt, kB}}, false};
  }
  throw ConfigError("unsupported motif tag");
}

std::int64_t IntersectionSize(std::span<const NodeId> a,
                              std::span<const NodeId> b) {
  std::int64_t count = 0;
  auto p = a.begin();
  auto q = b.begin();
  while (p != a.end() && q != b.end()) {
    if (*p < *q) {
      ++p;
    } else if (*q < *p) {
      ++q;
    } else {
      ++count;
      ++p;
      ++q;
    }
  }
  return count;
}

}  // namespace

MotifMatrix MotifAdjacency(const Graph& g, MotifType m,
                           const MotifOptions& options) {
  const Formula formula = FormulaFor(m);
  const NodeId n = g.num_nodes();
  const EdgeSplit split = SplitEdges(g);
  const SparsePattern ut = split.unidir.Transpose();
  auto pattern = [&](Operand op) -> const SparsePattern& {
    switch (op) {
      case Operand::kB:
        return split.bidir;
      case Operand::kU:
        return split.unidir;
      case Operand::kUt:
        return ut;
    }
    return split.bidir;
  };

  // Every mask is a subset of the undirected support, so all products are
  // accumulated into a value array aligned with it.
  const Graph::Undirected support = g.ToUndirected();
  std::vector<std::int64_t> c(support.neighbors.size(), 0);

  ParallelFor(n, options.workers, [&](std::int64_t begin, std::int64_t end) {
    for (NodeId i = static_cast<NodeId>(begin); i < end; ++i) {
      const auto srow = support.Neighbors(i);
      const std::int64_t base = support.offsets[i];
      for (const Term& term : formula.terms) {
        const auto xrow = pattern(term.x).Row(i);
        if (xrow.empty()) continue;
        const SparsePattern& y_t = pattern(TransposeOf(term.y));
        std::size_t cursor = 0;
        for (NodeId j : pattern(term.mask).Row(i)) {
          while (srow[cursor] < j) ++cursor;
          c[base + cursor] += IntersectionSize(xrow, y_t.Row(j));
        }
      }
    }
  });

  std::vector<std::int64_t> w(c.size(), 0);
  ParallelFor(n, options.workers, [&](std::int64_t begin, std::int64_t end) {
    for (NodeId i = static_cast<NodeId>(begin); i < end; ++i) {
      const auto srow = support.Neighbors(i);
      const std::int64_t base = support.offsets[i];
      for (std::size_t p = 0; p < srow.size(); ++p) {
        std::int64_t value = c[base + p];
        if (formula.add_transpose) {
          const NodeId j = srow[p];
          const auto jrow = support.Neighbors(j);
          auto it = std::lower_bound(jrow.begin(), jrow.end(), i);
          value += c[support.offsets[j] + (it - jrow.begin())];
        }
        w[base + p] = value;
      }
    }
  });

  MotifMatrix out;
  out.n = n;
  out.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    const auto srow = support.Neighbors(i);
    const std::int64_t base = support.offsets[i];
    for (std::size_t p = 0; p < srow.size(); ++p) {
      if (w[base + p] != 0) {
        out.cols.push_back(srow[p]);
        out.values.push_back(w[base + p]);
      }
    }
    out.offsets[i + 1] = out.nnz();
  }
  return out;
}

namespace {

// Six arc bits for an ordered triple: bit (3*a + b) is set when a->b.
using TripleCode = unsigned;

TripleCode Encode(const bool arcs[3][3]) {
  TripleCode code = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (arcs[a][b]) code |= 1u << (3 * a + b);
    }
  }
  return code;
}

// Smallest code over all 6 relabelings of the three nodes.
TripleCode Canonical(const bool arcs[3][3]) {
  int perm[3] = {0, 1, 2};
  TripleCode best = ~0u;
  do {
    bool permuted[3][3] = {};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) permuted[perm[a]][perm[b]] = arcs[a][b];
    }
    best = std::min(best, Encode(permuted));
  } while (std::next_permutation(perm, perm + 3));
  return best;
}

TripleCode TemplateCode(MotifType m) {
  bool arcs[3][3] = {};
  auto arc = [&](int a, int b) { arcs[a][b] = true; };
  auto both = [&](int a, int b) {
    arcs[a][b] = true;
    arcs[b][a] = true;
  };
  switch (m) {
    case MotifType::kM1:
      arc(0, 1), arc(1, 2), arc(2, 0);
      break;
    case MotifType::kM2:
      both(0, 1), arc(1, 2), arc(2, 0);
      break;
    case MotifType::kM3:
      both(0, 1), both(1, 2), arc(0, 2);
      break;
    case MotifType::kM4:
      both(0, 1), both(1, 2), both(2, 0);
      break;
    case MotifType::kM5:
      arc(0, 1), arc(1, 2), arc(0, 2);
      break;
    case MotifType::kM6:
      arc(2, 0), arc(2, 1), both(0, 1);
      break;
    case MotifType::kM7:
      arc(0, 2), arc(1, 2), both(0, 1);
      break;
  }
  return Canonical(arcs);
}

}  // namespace

MotifMatrix BruteForceMotifCount(const Graph& g, MotifType m,
                                 NodeId max_nodes) {
  const NodeId n = g.num_nodes();
  if (n > max_nodes) {
    throw ConfigError("brute-force motif count refused: " + std::to_string(n) +
                      " nodes exceeds oracle bound " +
                      std::to_string(max_nodes));
  }
  const TripleCode target = TemplateCode(m);
  std::vector<std::int64_t> dense(static_cast<std::size_t>(n) * n, 0);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      for (NodeId c = b + 1; c < n; ++c) {
        const NodeId v[3] = {a, b, c};
        bool arcs[3][3] = {};
        for (int s = 0; s < 3; ++s) {
          for (int t = 0; t < 3; ++t) {
            if (s != t) arcs[s][t] = g.HasEdge(v[s], v[t]);
          }
        }
        if (Canonical(arcs) != target) continue;
        for (int s = 0; s < 3; ++s) {
          for (int t = 0; t < 3; ++t) {
            if (s != t) ++dense[static_cast<std::size_t>(v[s]) * n + v[t]];
          }
        }
      }
    }
  }
  std::vector<std::tuple<NodeId, NodeId, std::int64_t>> triplets;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      const auto value = dense[static_cast<std::size_t>(i) * n + j];
      if (value != 0) triplets.emplace_back(i, j, value);
    }
  }
  return MotifMatrix::FromTriplets(n, std::move(triplets));
}

}  // namespace kcoremotif
