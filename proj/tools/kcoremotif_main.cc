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

// Usage:
//   kcoremotif cluster -i graph.txt --clusters 10 [--algorithm kcoremotif]
//       [--motif M6] [--k auto|INT] [--threshold 0.5] [--seed 0]
//       [-o labels.tsv] [-r report.txt] [--map-out F] [--coreness-out F]
//   kcoremotif inspect -i graph.txt
//   kcoremotif eval -g graph.txt -l labels.tsv
//   kcoremotif bench -i graph.txt --clusters 10 [--k INT]

#include <iostream>
#include <string>
#include <vector>

#include "kcoremotif/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kcoremotif::RunCli(args, std::cout, std::cerr);
}
