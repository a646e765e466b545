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

#include "kcoremotif/quality.h"

#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "kcoremotif/errors.h"

namespace kcoremotif {

double Modularity(const Graph& g, const Labeling& labels) {
  const NodeId n = g.num_nodes();
  if (labels.size() != n) {
    throw ConfigError("labeling size does not match the graph");
  }
  if (labels.CountUnlabeled() > 0) {
    throw ConfigError("modularity needs every node labeled");
  }
  const Graph::Undirected u = g.ToUndirected();
  const auto endpoints = static_cast<double>(u.neighbors.size());  // 2|E|
  if (endpoints == 0.0) {
    throw DataError("modularity undefined: graph has no edges");
  }

  std::unordered_map<ClusterId, std::int64_t> inside;  // endpoints inside c
  std::unordered_map<ClusterId, std::int64_t> degree;  // endpoints in c
  for (NodeId i = 0; i < n; ++i) {
    const ClusterId ci = labels.label[i];
    degree[ci] += u.Degree(i);
    for (NodeId j : u.Neighbors(i)) {
      if (labels.label[j] == ci) ++inside[ci];
    }
  }
  // Accumulate in label order so the sum is deterministic.
  std::map<ClusterId, std::int64_t> ordered(degree.begin(), degree.end());
  double q = 0.0;
  for (const auto& [c, d] : ordered) {
    const double e = static_cast<double>(inside[c]) / endpoints;
    const double a = static_cast<double>(d) / endpoints;
    q += e - a * a;
  }
  return q;
}

namespace {

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void WriteReport(const ClusterReport& r, std::ostream& out) {
  out << "dataset: " << r.dataset << '\n'
      << "n: " << r.n << '\n'
      << "m: " << r.m << '\n'
      << "algorithm: " << r.algorithm << '\n'
      << "motif: " << r.motif << '\n'
      << "k: " << r.k << '\n'
      << "k_source: " << r.k_source << '\n'
      << "distribution: " << r.distribution << '\n'
      << "fit_score_normal: " << FormatDouble(r.fit_score_normal) << '\n'
      << "fit_score_powerlaw: " << FormatDouble(r.fit_score_powerlaw) << '\n'
      << "retained_fraction: " << FormatDouble(r.retained_fraction) << '\n'
      << "n_clusters: " << r.n_clusters << '\n'
      << "modularity: " << FormatDouble(r.modularity) << '\n'
      << "modularity_variant: " << r.modularity_variant << '\n'
      << "time_decomposition: " << FormatDouble(r.time_decomposition) << '\n'
      << "time_clustering: " << FormatDouble(r.time_clustering) << '\n'
      << "time_recovery: " << FormatDouble(r.time_recovery) << '\n'
      << "time_total: " << FormatDouble(r.time_total) << '\n';
}

ClusterReport ReadReport(std::istream& in) {
  ClusterReport r;
  std::size_t line_no = 0;

  auto parse_int = [&](const std::string& s, auto& dst) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), dst);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError(line_no, "bad integer '" + s + "'");
    }
  };
  auto parse_double = [&](const std::string& s, double& dst) {
    char* end = nullptr;
    dst = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
      throw ParseError(line_no, "bad number '" + s + "'");
    }
  };

  const std::map<std::string, std::function<void(const std::string&)>>
      fields = {
          {"dataset", [&](const std::string& v) { r.dataset = v; }},
          {"n", [&](const std::string& v) { parse_int(v, r.n); }},
          {"m", [&](const std::string& v) { parse_int(v, r.m); }},
          {"algorithm", [&](const std::string& v) { r.algorithm = v; }},
          {"motif", [&](const std::string& v) { r.motif = v; }},
          {"k", [&](const std::string& v) { parse_int(v, r.k); }},
          {"k_source", [&](const std::string& v) { r.k_source = v; }},
          {"distribution", [&](const std::string& v) { r.distribution = v; }},
          {"fit_score_normal",
           [&](const std::string& v) { parse_double(v, r.fit_score_normal); }},
          {"fit_score_powerlaw",
           [&](const std::string& v) { parse_double(v, r.fit_score_powerlaw); }},
          {"retained_fraction",
           [&](const std::string& v) { parse_double(v, r.retained_fraction); }},
          {"n_clusters", [&](const std::string& v) { parse_int(v, r.n_clusters); }},
          {"modularity",
           [&](const std::string& v) { parse_double(v, r.modularity); }},
          {"modularity_variant",
           [&](const std::string& v) { r.modularity_variant = v; }},
          {"time_decomposition",
           [&](const std::string& v) { parse_double(v, r.time_decomposition); }},
          {"time_clustering",
           [&](const std::string& v) { parse_double(v, r.time_clustering); }},
          {"time_recovery",
           [&](const std::string& v) { parse_double(v, r.time_recovery); }},
          {"time_total",
           [&](const std::string& v) { parse_double(v, r.time_total); }},
      };

  std::set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) {
      throw ParseError(line_no, "expected 'key: value'");
    }
    const std::string key = line.substr(0, colon);
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(line_no, "unknown key '" + key + "'");
    it->second(line.substr(colon + 2));
    seen.insert(key);
  }
  for (const auto& [key, unused] : fields) {
    if (!seen.count(key)) throw ParseError(line_no, "missing key '" + key + "'");
  }
  return r;
}

}  // namespace kcoremotif
