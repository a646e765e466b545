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

// Automatic choice of k from the shape of the coreness distribution.
//
// Networks whose coreness histogram looks normal keep roughly 40-50% of the
// nodes in the clustered core; power-law shaped ones keep 5-10%.

#ifndef KCOREMOTIF_KSELECT_H_
#define KCOREMOTIF_KSELECT_H_

#include <cstdint>
#include <map>
#include <string>

#include "kcoremotif/kcore.h"

namespace kcoremotif {

struct CorenessHistogram {
  std::map<std::int32_t, std::int64_t> count_at;
  std::int64_t n = 0;
};

CorenessHistogram MakeCorenessHistogram(const CorenessMap& c);

enum class DistributionKind { kNormal, kPowerLaw };

std::string DistributionName(DistributionKind kind);

struct DistributionClass {
  DistributionKind kind = DistributionKind::kNormal;
  // Coefficients of determination of each fitted curve against the
  // histogram, clamped to [0, 1].
  double fit_score_normal = 0.0;
  double fit_score_powerlaw = 0.0;

  // Fitted parameters, for reporting.
  double normal_mean = 0.0;
  double normal_sd = 0.0;
  double normal_amplitude = 0.0;
  double powerlaw_exponent = 0.0;
  double powerlaw_scale = 0.0;
};

// Fits a Gaussian (mean and sd from the data, least-squares amplitude) and
// a power law (least squares on log-log pairs) to the (value, count) pairs
// with value >= 1 and count > 0. Throws DegenerateError when fewer than 3
// distinct coreness values are present.
DistributionClass ClassifyDistribution(const CorenessHistogram& h);

struct RetentionBand {
  double low;
  double high;
};

RetentionBand BandFor(DistributionKind kind);

// Largest k >= 1 whose k-core keeps at least band.low of the nodes; 1 when
// no k does (the 1-core is the whole non-isolated graph).
std::int32_t SelectK(const CorenessMap& c, DistributionKind kind);

}  // namespace kcoremotif

#endif  // KCOREMOTIF_KSELECT_H_
