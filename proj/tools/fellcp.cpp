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

// fellcp: batch front end. One job per invocation, one JSON report on stdout.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fellcp/cli.hpp"
#include "fellcp/gallery.hpp"

int main(int argc, char** argv) {
  using namespace fellcp;

  CLI::App app{"Positive definite bundle maps and completely positive maps"};
  app.set_version_flag("--version", toolkit_version());

  JobSpec job;
  std::string positional;
  std::string out;
  bool list = false;
  std::map<std::string, std::string> paths;

  app.add_option("command", job.command, "command to run")
      ->check(CLI::IsMember(known_commands()));
  app.add_option("name", positional, "example name (run-example only)");
  for (const char* key : {"bundle", "source-bundle", "target-bundle", "map", "hom"}) {
    app.add_option(std::string("--") + key, paths[key], std::string(key) + " file");
  }
  app.add_option("--tol", job.tol, "relative tolerance")->capture_default_str();
  app.add_option("--seed", job.seed, "seed for randomized procedures")->capture_default_str();
  app.add_option("--trials", job.trials, "oracle trials")->capture_default_str();
  app.add_option("--max-n", job.max_n, "largest oracle tuple length")->capture_default_str();
  app.add_option("--out", out, "also write the report to this file");
  app.add_flag("--witness", job.witness, "include eigenvector witnesses");
  app.add_option("--example", job.example, "gallery example for run-example");
  app.add_flag("--timing", job.timing, "add wall-clock time (report no longer byte-stable)");
  app.add_flag("--list-examples", list, "print the gallery names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitInputError;
  }

  if (list) {
    for (const auto& name : gallery_names()) std::cout << name << "\n";
    return kExitOk;
  }
  if (job.command.empty()) {
    std::cerr << app.help();
    return kExitInputError;
  }
  if (!positional.empty()) {
    if (job.command != "run-example" || !job.example.empty()) {
      std::cerr << "unexpected argument '" << positional << "'\n";
      return kExitInputError;
    }
    job.example = positional;
  }
  for (const auto& [key, path] : paths) {
    if (!path.empty()) job.inputs[key] = path;
  }

  const RunResult res = run(job);
  const std::string text = canonical_dump(res.report);
  std::cout << text;
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text)) {
      std::cerr << "cannot write '" << out << "'\n";
      return kExitInputError;
    }
  }
  return res.exit_code;
}
