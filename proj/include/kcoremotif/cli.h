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

#ifndef KCOREMOTIF_CLI_H_
#define KCOREMOTIF_CLI_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "kcoremotif/graph.h"
#include "kcoremotif/spectral.h"

namespace kcoremotif {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitConvergence = 3;

// Entry point for the `kcoremotif` tool: subcommands cluster, inspect, eval
// and bench. Returns the exit status; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// "external_id<TAB>cluster_id" lines sorted by external id. Cluster ids are
// renumbered densely in order of first appearance.
void WriteLabels(const IdMap& ids, const Labeling& labels, std::ostream& out);

// Reads a labels file against a cleaned graph's id map. Throws DataError
// naming the first (smallest) external id without a label, or an id that
// is not part of the graph.
Labeling ReadLabels(std::istream& in, const IdMap& ids);

}  // namespace kcoremotif

#endif  // KCOREMOTIF_CLI_H_
