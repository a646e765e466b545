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

#ifndef KCOREMOTIF_QUALITY_H_
#define KCOREMOTIF_QUALITY_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "kcoremotif/graph.h"
#include "kcoremotif/spectral.h"

namespace kcoremotif {

// Newman modularity of a total labeling on the undirected simplification of
// g (a reciprocal pair is one edge):
//   Q = sum_c (e_c - a_c^2)
// with e_c the fraction of edges inside c and a_c the fraction of edge
// endpoints in c. Throws DataError for a graph without edges and
// ConfigError for a partial labeling.
double Modularity(const Graph& g, const Labeling& labels);

// Summary of one clustering run. Serialized as "key: value" lines.
struct ClusterReport {
  std::string dataset;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string algorithm;
  std::string motif;         // "none" for the conventional baseline
  std::int32_t k = 0;        // 0 when no core was extracted
  std::string k_source;      // "auto", "given" or "none"
  std::string distribution;  // "NORMAL", "POWER_LAW" or "none"
  double fit_score_normal = 0.0;
  double fit_score_powerlaw = 0.0;
  double retained_fraction = 1.0;
  std::int32_t n_clusters = 0;
  double modularity = 0.0;
  std::string modularity_variant = "undirected-newman";
  double time_decomposition = 0.0;
  double time_clustering = 0.0;
  double time_recovery = 0.0;
  double time_total = 0.0;

  friend bool operator==(const ClusterReport&, const ClusterReport&) = default;
};

void WriteReport(const ClusterReport& r, std::ostream& out);
// Throws ParseError on unknown keys, missing keys or malformed values.
ClusterReport ReadReport(std::istream& in);

}  // namespace kcoremotif

#endif  // KCOREMOTIF_QUALITY_H_
