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

#ifndef KCOREMOTIF_ERRORS_H_
#define KCOREMOTIF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kcoremotif {

// Bad input data: unparsable files, empty graphs, missing label coverage.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-numbered failure while reading an edge list or labels file.
class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Invalid option values or combinations (unknown motif, bad threshold...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The iterative eigensolver did not reach the acceptance residual.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_residual)
      : std::runtime_error(what), achieved_residual_(achieved_residual) {}

  double achieved_residual() const { return achieved_residual_; }

 private:
  double achieved_residual_;
};

// Input is valid but too degenerate for the requested computation, e.g.
// fewer distinct embedding rows than clusters.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kcoremotif

#endif  // KCOREMOTIF_ERRORS_H_
