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

#include "kcoremotif/kselect.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kcoremotif/errors.h"

namespace kcoremotif {

CorenessHistogram MakeCorenessHistogram(const CorenessMap& c) {
  CorenessHistogram h;
  for (std::int32_t k : c.core) ++h.count_at[k];
  h.n = static_cast<std::int64_t>(c.core.size());
  return h;
}

std::string DistributionName(DistributionKind kind) {
  return kind == DistributionKind::kNormal ? "NORMAL" : "POWER_LAW";
}

namespace {

double RSquared(const std::vector<double>& observed,
                const std::vector<double>& predicted) {
  double mean = 0.0;
  for (double y : observed) mean += y;
  mean /= static_cast<double>(observed.size());
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    ss_res += (observed[i] - predicted[i]) * (observed[i] - predicted[i]);
    ss_tot += (observed[i] - mean) * (observed[i] - mean);
  }
  if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : 0.0;
  return std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
}

}  // namespace

DistributionClass ClassifyDistribution(const CorenessHistogram& h) {
  if (h.count_at.size() < 3) {
    throw DegenerateError("degenerate distribution: " +
                          std::to_string(h.count_at.size()) +
                          " distinct coreness values (need at least 3)");
  }

  DistributionClass cls;
  double total = 0.0;
  double sum = 0.0;
  for (const auto& [k, count] : h.count_at) {
    total += static_cast<double>(count);
    sum += static_cast<double>(k) * static_cast<double>(count);
  }
  const double mean = sum / total;
  double var = 0.0;
  for (const auto& [k, count] : h.count_at) {
    var += static_cast<double>(count) * (k - mean) * (k - mean);
  }
  const double sd = std::sqrt(var / total);
  cls.normal_mean = mean;
  cls.normal_sd = sd;

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [k, count] : h.count_at) {
    if (k >= 1 && count > 0) {
      xs.push_back(k);
      ys.push_back(static_cast<double>(count));
    }
  }
  if (xs.size() < 3) {
    throw DegenerateError("degenerate distribution: fewer than 3 nonzero "
                          "coreness values");
  }

  // Gaussian shape with the sample moments; amplitude by least squares.
  std::vector<double> shape(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double z = sd > 0.0 ? (xs[i] - mean) / sd : 0.0;
    shape[i] = std::exp(-0.5 * z * z);
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += ys[i] * shape[i];
    den += shape[i] * shape[i];
  }
  cls.normal_amplitude = den > 0.0 ? num / den : 0.0;
  std::vector<double> normal_fit(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    normal_fit[i] = cls.normal_amplitude * shape[i];
  }
  cls.fit_score_normal = RSquared(ys, normal_fit);

  // log y = log C - alpha log x, weighted by count: the log of a bin with
  // count y has variance about 1/y, so sparse tail bins would otherwise
  // flatten the slope.
  double sw = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double w = ys[i];
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sw += w;
    sx += w * lx;
    sy += w * ly;
    sxx += w * lx * lx;
    sxy += w * lx * ly;
  }
  const double slope = (sw * sxy - sx * sy) / (sw * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / sw;
  cls.powerlaw_exponent = -slope;
  cls.powerlaw_scale = std::exp(intercept);
  std::vector<double> power_fit(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    power_fit[i] = cls.powerlaw_scale * std::pow(xs[i], slope);
  }
  cls.fit_score_powerlaw = RSquared(ys, power_fit);

  cls.kind = cls.fit_score_powerlaw > cls.fit_score_normal
                 ? DistributionKind::kPowerLaw
                 : DistributionKind::kNormal;
  return cls;
}

RetentionBand BandFor(DistributionKind kind) {
  return kind == DistributionKind::kNormal ? RetentionBand{0.40, 0.50}
                                           : RetentionBand{0.05, 0.10};
}

std::int32_t SelectK(const CorenessMap& c, DistributionKind kind) {
  const RetentionBand band = BandFor(kind);
  const std::int32_t max_core = c.MaxCore();
  if (max_core < 1) return 1;
  // retained[k] = |{i : core[i] >= k}|, accumulated from the top.
  std::vector<std::int64_t> at(static_cast<std::size_t>(max_core) + 2, 0);
  for (std::int32_t k : c.core) ++at[k];
  const auto n = static_cast<double>(c.core.size());
  std::int64_t retained = 0;
  for (std::int32_t k = max_core; k >= 1; --k) {
    retained += at[k];
    if (static_cast<double>(retained) / n >= band.low) return k;
  }
  return 1;
}

}  // namespace kcoremotif
