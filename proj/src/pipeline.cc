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

#include "kcoremotif/pipeline.h"

#include <chrono>

#include "kcoremotif/errors.h"
#include "kcoremotif/kcore.h"
#include "kcoremotif/kselect.h"

namespace kcoremotif {

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "conventional") return Algorithm::kConventional;
  if (name == "motif") return Algorithm::kMotif;
  if (name == "kcoremotif") return Algorithm::kKCoreMotif;
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected conventional, motif or kcoremotif)");
}

std::string AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kConventional:
      return "conventional";
    case Algorithm::kMotif:
      return "motif";
    case Algorithm::kKCoreMotif:
      return "kcoremotif";
  }
  return "unknown";
}

namespace {

// A motif with no instances leaves nothing to cluster; say which one.
MotifMatrix CheckedMotifAdjacency(const Graph& g, const PipelineConfig& cfg,
                                  const char* where) {
  MotifMatrix w = MotifAdjacency(g, cfg.motif, MotifOptions{cfg.workers});
  if (w.nnz() == 0) {
    throw DataError("no " + MotifName(cfg.motif) + " instances in " + where +
                    "; choose another --motif (undirected inputs listing each "
                    "edge once only contain M1 and M5)");
  }
  return w;
}

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Adds the elapsed time to `slot` when the scope exits, also on exceptions.
class StageTimer {
 public:
  explicit StageTimer(double& slot) : slot_(slot), start_(Clock::now()) {}
  ~StageTimer() { slot_ += SecondsSince(start_); }
  StageTimer(const StageTimer&) = delete;
  StageTimer& operator=(const StageTimer&) = delete;

 private:
  double& slot_;
  Clock::time_point start_;
};

Labeling RunKCoreMotif(const Graph& g, const PipelineConfig& cfg,
                       ClusterReport& report) {
  CorenessMap coreness;
  Subgraph core;
  {
    StageTimer timer(report.time_decomposition);
    coreness = Coreness(g);
    if (cfg.k.has_value()) {
      report.k = *cfg.k;
      report.k_source = "given";
    } else {
      const DistributionClass cls =
          ClassifyDistribution(MakeCorenessHistogram(coreness));
      report.k = SelectK(coreness, cls.kind);
      report.k_source = "auto";
      report.distribution = DistributionName(cls.kind);
      report.fit_score_normal = cls.fit_score_normal;
      report.fit_score_powerlaw = cls.fit_score_powerlaw;
    }
    if (report.k < 1) throw ConfigError("k must be at least 1");
    std::vector<NodeId> kept = KCoreNodes(coreness, report.k);
    if (kept.empty()) {
      throw DataError("the " + std::to_string(report.k) +
                      "-core is empty (max coreness " +
                      std::to_string(coreness.MaxCore()) + ")");
    }
    report.retained_fraction = RetainedFraction(coreness, report.k);
    core = InducedSubgraph(g, std::move(kept));
  }

  Labeling partial(g.num_nodes());
  {
    StageTimer timer(report.time_clustering);
    const MotifMatrix w = CheckedMotifAdjacency(core.graph, cfg, "the k-core");
    const Labeling local =
        SpectralCluster(w.Cast<double>(), cfg.n_clusters, cfg.seed, cfg.spectral);
    for (NodeId i = 0; i < local.size(); ++i) {
      partial.label[core.parent_index[i]] = local.label[i];
    }
    partial.next_label = local.next_label;
  }

  StageTimer timer(report.time_recovery);
  return RecoverLabels(g, coreness, std::move(partial), cfg.recovery);
}

Labeling RunBaseline(const Graph& g, const PipelineConfig& cfg,
                     ClusterReport& report) {
  StageTimer timer(report.time_clustering);
  const WeightMatrix w =
      cfg.algorithm == Algorithm::kConventional
          ? EdgeAdjacency(g)
          : CheckedMotifAdjacency(g, cfg, "the graph").Cast<double>();
  Labeling labels = SpectralCluster(w, cfg.n_clusters, cfg.seed, cfg.spectral);
  if (labels.CountUnlabeled() > 0) {
    labels = RecoverLabels(g, Coreness(g), std::move(labels), cfg.recovery);
  }
  return labels;
}

}  // namespace

Labeling TimedPipeline(const Graph& g, const PipelineConfig& cfg,
                       ClusterReport& report) {
  const Clock::time_point start = Clock::now();
  report = ClusterReport{};
  report.dataset = cfg.dataset;
  report.n = g.num_nodes();
  report.m = g.num_edges();
  report.algorithm = AlgorithmName(cfg.algorithm);
  report.motif = cfg.algorithm == Algorithm::kConventional
                     ? "none"
                     : MotifName(cfg.motif);
  report.k_source = "none";
  report.distribution = "none";
  if (cfg.n_clusters < 1) throw ConfigError("n_clusters must be positive");

  struct TotalTimer {
    ClusterReport& r;
    Clock::time_point start;
    ~TotalTimer() { r.time_total = SecondsSince(start); }
  } total{report, start};

  SpectralOptions spectral = cfg.spectral;
  spectral.eigen.workers = cfg.workers;
  PipelineConfig run = cfg;
  run.spectral = spectral;

  Labeling labels = cfg.algorithm == Algorithm::kKCoreMotif
                        ? RunKCoreMotif(g, run, report)
                        : RunBaseline(g, run, report);
  report.n_clusters = labels.CountClusters();
  report.modularity = Modularity(g, labels);
  return labels;
}

}  // namespace kcoremotif
