// Copyright (c) 2026 The deltand Authors
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

// Batch front end.  Exit codes: 0 success, 1 invalid input, 2 a Hom
// computation did not stabilise below the cutoff (always for hom, only with
// strict for oracle-hom).

#ifndef DELTAND_CLI_HPP_
#define DELTAND_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "deltand/komplex.hpp"

namespace deltand {

enum class OutputFormat { json, text, dot };

struct Job {
  std::string command;  // normalize, hom, k0, iso, tau, mesh, window, stabilize, oracle-hom, blocks
  // Payload texts (DSL or JSON), already read from files or stdin.
  std::vector<std::string> inputs;
  // Atom identifiers for hom, tau, mesh and window.
  std::string from;
  std::string to;
  int rows = 3;
  int cols = 4;
  int nodes = 1;
  std::optional<int> shift;
  HomOptions hom;
  std::optional<OutputFormat> format;
  bool strict = false;
};

int run(const Job& job, std::ostream& out, std::ostream& err);

}  // namespace deltand

#endif  // DELTAND_CLI_HPP_
