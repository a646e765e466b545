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

#include "kcoremotif/cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "kcoremotif/errors.h"
#include "kcoremotif/kcore.h"
#include "kcoremotif/kselect.h"
#include "kcoremotif/motif.h"
#include "kcoremotif/pipeline.h"
#include "kcoremotif/quality.h"

namespace kcoremotif {

void WriteLabels(const IdMap& ids, const Labeling& labels, std::ostream& out) {
  std::unordered_map<ClusterId, ClusterId> dense;
  for (NodeId i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = dense.emplace(labels.label[i],
                                        static_cast<ClusterId>(dense.size()));
    out << ids.ToExternal(i) << '\t' << it->second << '\n';
  }
}

Labeling ReadLabels(std::istream& in, const IdMap& ids) {
  const auto n = static_cast<NodeId>(ids.size());
  Labeling labels(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    ExternalId ext = 0;
    long long cluster = 0;
    std::string extra;
    if (!(fields >> ext >> cluster) || (fields >> extra) || cluster < 0) {
      throw ParseError(line_no, "expected 'external_id<TAB>cluster_id'");
    }
    const NodeId i = ids.ToInternal(ext);
    if (i < 0) {
      throw DataError("labels file names node " + std::to_string(ext) +
                      " which is not in the graph");
    }
    labels.label[i] = static_cast<ClusterId>(cluster);
    labels.next_label =
        std::max(labels.next_label, static_cast<ClusterId>(cluster + 1));
  }
  for (NodeId i = 0; i < n; ++i) {
    if (!labels.IsLabeled(i)) {
      throw DataError("labels file does not cover node " +
                      std::to_string(ids.ToExternal(i)));
    }
  }
  return labels;
}

namespace {

struct ClusterFlags {
  std::string input;
  std::string dataset;
  std::string algorithm = "kcoremotif";
  std::string motif;
  std::string k = "auto";
  int clusters = 0;
  double threshold = 0.5;
  std::string share_base = "labeled";
  std::uint64_t seed = 0;
  int workers = 1;
  std::string labels_out;
  std::string report_out;
  std::string map_out;
  std::string coreness_out;
  std::string motif_out;
};

// Builds a validated pipeline configuration; throws ConfigError on bad or
// conflicting flags before any data is read.
PipelineConfig MakeConfig(const ClusterFlags& f) {
  PipelineConfig cfg;
  cfg.algorithm = ParseAlgorithm(f.algorithm);
  if (!f.motif.empty()) {
    if (cfg.algorithm == Algorithm::kConventional) {
      throw ConfigError("--motif conflicts with --algorithm conventional");
    }
    cfg.motif = ParseMotif(f.motif);
  }
  if (f.k != "auto") {
    std::int32_t k = 0;
    auto [ptr, ec] = std::from_chars(f.k.data(), f.k.data() + f.k.size(), k);
    if (ec != std::errc() || ptr != f.k.data() + f.k.size() || k < 1) {
      throw ConfigError("--k must be 'auto' or a positive integer, got '" +
                        f.k + "'");
    }
    if (cfg.algorithm != Algorithm::kKCoreMotif) {
      throw ConfigError("--k only applies to --algorithm kcoremotif");
    }
    cfg.k = k;
  }
  if (f.clusters < 1) throw ConfigError("--clusters must be positive");
  cfg.n_clusters = f.clusters;
  if (!(f.threshold >= 0.0 && f.threshold <= 1.0)) {
    throw ConfigError("--threshold must lie in [0, 1]");
  }
  cfg.recovery.threshold = f.threshold;
  if (f.share_base == "labeled") {
    cfg.recovery.base = ShareBase::kLabeledNeighbors;
  } else if (f.share_base == "all") {
    cfg.recovery.base = ShareBase::kAllNeighbors;
  } else {
    throw ConfigError("--share-base must be 'labeled' or 'all'");
  }
  if (f.workers < 1) throw ConfigError("--workers must be positive");
  cfg.seed = f.seed;
  cfg.workers = f.workers;
  cfg.dataset = f.dataset.empty()
                    ? std::filesystem::path(f.input).stem().string()
                    : f.dataset;
  return cfg;
}

// Collects output files and deletes them unless Commit() is called.
class OutputSet {
 public:
  ~OutputSet() {
    if (committed_) return;
    for (const auto& p : written_) {
      std::error_code ec;
      std::filesystem::remove(p, ec);
    }
  }

  void Write(const std::string& path,
             const std::function<void(std::ostream&)>& fill) {
    if (path.empty()) return;
    written_.push_back(path);
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    fill(out);
    out.flush();
    if (!out) throw DataError("failed writing '" + path + "'");
  }

  void Commit() { committed_ = true; }

 private:
  std::vector<std::string> written_;
  bool committed_ = false;
};

int CmdCluster(const ClusterFlags& flags, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const PipelineConfig cfg = MakeConfig(flags);
  CleanGraph clean = LoadGraph(flags.input);

  ClusterReport report;
  const Labeling labels = TimedPipeline(clean.graph, cfg, report);

  OutputSet outputs;
  outputs.Write(flags.labels_out, [&](std::ostream& o) {
    WriteLabels(clean.ids, labels, o);
  });
  outputs.Write(flags.map_out, [&](std::ostream& o) { clean.ids.Write(o); });
  outputs.Write(flags.coreness_out,
                [&](std::ostream& o) { Coreness(clean.graph).Write(o); });
  outputs.Write(flags.motif_out, [&](std::ostream& o) {
    MotifAdjacency(clean.graph, cfg.motif, MotifOptions{cfg.workers})
        .WriteCoordinates(o);
  });
  // Stage timings exclude I/O; the total covers the whole command.
  report.time_total = std::max(
      report.time_total,
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count());
  if (flags.report_out.empty()) {
    WriteReport(report, out);
  } else {
    outputs.Write(flags.report_out,
                  [&](std::ostream& o) { WriteReport(report, o); });
  }
  outputs.Commit();
  return kExitOk;
}

int CmdInspect(const std::string& input, std::ostream& out) {
  const CleanGraph clean = LoadGraph(input);
  const CorenessMap c = Coreness(clean.graph);
  const CorenessHistogram h = MakeCorenessHistogram(c);
  out << "n\t" << clean.graph.num_nodes() << '\n'
      << "m\t" << clean.graph.num_edges() << '\n'
      << "max_coreness\t" << c.MaxCore() << '\n'
      << "# coreness histogram (value<TAB>count)\n";
  for (const auto& [k, count] : h.count_at) out << k << '\t' << count << '\n';
  try {
    const DistributionClass cls = ClassifyDistribution(h);
    const std::int32_t k = SelectK(c, cls.kind);
    out << "distribution\t" << DistributionName(cls.kind) << '\n'
        << "fit_score_normal\t" << cls.fit_score_normal << '\n'
        << "fit_score_powerlaw\t" << cls.fit_score_powerlaw << '\n'
        << "auto_k\t" << k << '\n'
        << "retained_fraction\t" << RetainedFraction(c, k) << '\n';
  } catch (const DegenerateError& e) {
    out << "# " << e.what() << "; pass --k explicitly to cluster\n";
  }
  return kExitOk;
}

int CmdEval(const std::string& graph_path, const std::string& labels_path,
            std::ostream& out) {
  const CleanGraph clean = LoadGraph(graph_path);
  std::ifstream in(labels_path);
  if (!in) throw DataError("cannot open '" + labels_path + "'");
  const Labeling labels = ReadLabels(in, clean.ids);
  out << "modularity\t" << std::setprecision(17) << Modularity(clean.graph, labels)
      << '\n'
      << "n_clusters\t" << labels.CountClusters() << '\n';
  return kExitOk;
}

int CmdBench(const ClusterFlags& flags, std::ostream& out) {
  const CleanGraph clean = LoadGraph(flags.input);
  out << "algorithm\tk\tretained\tclusters\tmodularity\tdecomposition_s\t"
         "clustering_s\trecovery_s\ttotal_s\n";
  for (const char* algorithm : {"conventional", "motif", "kcoremotif"}) {
    ClusterFlags f = flags;
    f.algorithm = algorithm;
    if (f.algorithm == "conventional") f.motif.clear();
    if (f.algorithm != "kcoremotif") f.k = "auto";
    const PipelineConfig cfg = MakeConfig(f);
    ClusterReport r;
    try {
      TimedPipeline(clean.graph, cfg, r);
    } catch (const std::exception& e) {
      out << algorithm << "\tfailed: " << e.what() << '\n';
      continue;
    }
    out << r.algorithm << '\t' << r.k << '\t' << r.retained_fraction << '\t'
        << r.n_clusters << '\t' << r.modularity << '\t' << r.time_decomposition
        << '\t' << r.time_clustering << '\t' << r.time_recovery << '\t'
        << r.time_total << '\n';
  }
  return kExitOk;
}

void AddClusterOptions(CLI::App* cmd, ClusterFlags& f, bool bench) {
  cmd->add_option("-i,--input", f.input, "SNAP edge-list file")->required();
  if (!bench) {
    cmd->add_option("-a,--algorithm", f.algorithm,
                    "conventional, motif or kcoremotif");
  }
  cmd->add_option("--motif", f.motif, "motif M1..M7 (default M6)");
  cmd->add_option("--k", f.k, "core order: 'auto' or a positive integer");
  cmd->add_option("-c,--clusters", f.clusters, "number of clusters")
      ->required();
  cmd->add_option("--threshold", f.threshold, "recovery share threshold");
  cmd->add_option("--share-base", f.share_base,
                  "recovery share denominator: labeled or all");
  cmd->add_option("--seed", f.seed, "k-means++ seed");
  cmd->add_option("--workers", f.workers, "worker threads");
  cmd->add_option("--dataset", f.dataset, "dataset name for the report");
  if (bench) return;
  cmd->add_option("-o,--labels-out", f.labels_out, "labels file");
  cmd->add_option("-r,--report-out", f.report_out,
                  "report file (stdout when omitted)");
  cmd->add_option("--map-out", f.map_out, "id map sidecar");
  cmd->add_option("--coreness-out", f.coreness_out, "coreness dump");
  cmd->add_option("--motif-out", f.motif_out,
                  "motif matrix of the whole graph, coordinate text");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"KCoreMotif graph clustering", "kcoremotif"};
  app.require_subcommand(1);

  ClusterFlags cluster_flags;
  CLI::App* cluster = app.add_subcommand("cluster", "cluster a graph");
  AddClusterOptions(cluster, cluster_flags, /*bench=*/false);

  std::string inspect_input;
  CLI::App* inspect =
      app.add_subcommand("inspect", "coreness distribution and auto k");
  inspect->add_option("-i,--input", inspect_input, "SNAP edge-list file")
      ->required();

  std::string eval_graph;
  std::string eval_labels;
  CLI::App* eval = app.add_subcommand("eval", "modularity of a labels file");
  eval->add_option("-g,--graph", eval_graph, "SNAP edge-list file")->required();
  eval->add_option("-l,--labels", eval_labels, "labels file")->required();

  ClusterFlags bench_flags;
  CLI::App* bench =
      app.add_subcommand("bench", "compare the three algorithms on one graph");
  AddClusterOptions(bench, bench_flags, /*bench=*/true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cluster) return CmdCluster(cluster_flags, out);
    if (*inspect) return CmdInspect(inspect_input, out);
    if (*eval) return CmdEval(eval_graph, eval_labels, out);
    if (*bench) return CmdBench(bench_flags, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace kcoremotif
