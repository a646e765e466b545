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

#ifndef KCOREMOTIF_SPARSE_H_
#define KCOREMOTIF_SPARSE_H_

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "kcoremotif/graph.h"

namespace kcoremotif {

// Square 0/1 sparse matrix in CSR form with sorted column indices.
struct SparsePattern {
  NodeId n = 0;
  std::vector<std::int64_t> offsets{0};
  std::vector<NodeId> cols;

  std::span<const NodeId> Row(NodeId i) const {
    return {cols.data() + offsets[i],
            static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }
  std::int64_t nnz() const { return static_cast<std::int64_t>(cols.size()); }
  bool Contains(NodeId i, NodeId j) const {
    auto r = Row(i);
    return std::binary_search(r.begin(), r.end(), j);
  }
  SparsePattern Transpose() const;

  // Builds from (row, col) pairs; duplicates are merged.
  static SparsePattern FromPairs(NodeId n,
                                 std::vector<std::pair<NodeId, NodeId>> pairs);

  friend bool operator==(const SparsePattern&, const SparsePattern&) = default;
};

// Square sparse matrix in CSR form with sorted column indices.
template <typename T>
struct CsrMatrix {
  NodeId n = 0;
  std::vector<std::int64_t> offsets{0};
  std::vector<NodeId> cols;
  std::vector<T> values;

  std::span<const NodeId> RowCols(NodeId i) const {
    return {cols.data() + offsets[i],
            static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }
  std::span<const T> RowValues(NodeId i) const {
    return {values.data() + offsets[i],
            static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }
  std::int64_t nnz() const { return static_cast<std::int64_t>(cols.size()); }

  // Zero when (i, j) is not stored.
  T At(NodeId i, NodeId j) const {
    auto r = RowCols(i);
    auto it = std::lower_bound(r.begin(), r.end(), j);
    if (it == r.end() || *it != j) return T{};
    return values[offsets[i] + (it - r.begin())];
  }

  // Sums duplicate (row, col) entries and drops explicit zeros.
  static CsrMatrix FromTriplets(NodeId n,
                                std::vector<std::tuple<NodeId, NodeId, T>> t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) <
             std::tie(std::get<0>(b), std::get<1>(b));
    });
    CsrMatrix m;
    m.n = n;
    m.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t p = 0; p < t.size();) {
      auto [i, j, v] = t[p];
      std::size_t q = p + 1;
      while (q < t.size() && std::get<0>(t[q]) == i && std::get<1>(t[q]) == j) {
        v += std::get<2>(t[q]);
        ++q;
      }
      if (v != T{}) {
        m.cols.push_back(j);
        m.values.push_back(v);
        ++m.offsets[i + 1];
      }
      p = q;
    }
    for (NodeId i = 0; i < n; ++i) m.offsets[i + 1] += m.offsets[i];
    return m;
  }

  template <typename U>
  CsrMatrix<U> Cast() const {
    CsrMatrix<U> out;
    out.n = n;
    out.offsets = offsets;
    out.cols = cols;
    out.values.assign(values.begin(), values.end());
    return out;
  }

  bool IsSymmetric() const {
    for (NodeId i = 0; i < n; ++i) {
      auto c = RowCols(i);
      auto v = RowValues(i);
      for (std::size_t p = 0; p < c.size(); ++p) {
        if (At(c[p], i) != v[p]) return false;
      }
    }
    return true;
  }

  // Coordinate text: "i<TAB>j<TAB>value" for every stored entry.
  void WriteCoordinates(std::ostream& out) const {
    for (NodeId i = 0; i < n; ++i) {
      auto c = RowCols(i);
      auto v = RowValues(i);
      for (std::size_t p = 0; p < c.size(); ++p) {
        out << i << '\t' << c[p] << '\t' << v[p] << '\n';
      }
    }
  }

  friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;
};

}  // namespace kcoremotif

#endif  // KCOREMOTIF_SPARSE_H_
