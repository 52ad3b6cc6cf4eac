// Copyright 2026 The fellcp Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fellcp/io.hpp"

namespace fellcp {

/** Exit codes of the command-line tool. */
enum ExitCode : int {
  kExitOk = 0,           // a verdict was computed (whatever it is)
  kExitInputError = 1,   // unreadable, malformed or invalid input
  kExitNumericError = 2  // a numerical routine missed its accuracy contract
};

struct JobSpec {
  std::string command;
  /** Keys: bundle, source-bundle, target-bundle, map, hom. Values: paths. */
  std::map<std::string, std::string> inputs;
  std::string example;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  int trials = 1000;
  int max_n = 4;
  bool witness = false;
  /** Adds wall-clock time to the report, which then stops being byte-stable. */
  bool timing = false;
};

struct RunResult {
  int exit_code = kExitOk;
  Json report;
};

const std::vector<std::string>& known_commands();

std::string toolkit_version();

/**
 * Reads every referenced file, then runs the command. Never throws for
 * input or numeric problems: those become an "error" member of the report
 * and a non-zero exit code.
 */
RunResult run(const JobSpec& job);

}  // namespace fellcp
