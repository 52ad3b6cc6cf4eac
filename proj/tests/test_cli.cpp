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

// Drives the fellcp executable on the committed fixtures and on a few
// hand-made inputs in a scratch directory.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "catch_amalgamated.hpp"
#include "fellcp/cli.hpp"
#include "fellcp/io.hpp"

using namespace fellcp;
namespace fs = std::filesystem;
using Catch::Matchers::WithinAbs;

namespace {

struct Outcome {
  int exit_code;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Outcome run_cli(const fs::path& dir, const std::vector<std::string>& args) {
  std::string cmd = "cd " + quote(dir.string()) + " && " + quote(FELLCP_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json job_of(const fs::path& dir) { return parse_json_text(read_file((dir / "job.json").string())); }

std::vector<std::string> argv_of(const Json& job) { return job["argv"].get<std::vector<std::string>>(); }

std::vector<fs::path> fixture_dirs() {
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(FIXTURES_DIR)) {
    if (entry.is_directory() && fs::exists(entry.path() / "job.json")) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

fs::path scratch() {
  const fs::path p = fs::temp_directory_path() / "fellcp_cli_test";
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("every fixture reproduces its expected outcome", "[cli]") {
  const auto dirs = fixture_dirs();
  CHECK(dirs.size() >= 10);
  for (const fs::path& dir : dirs) {
    INFO(dir.filename().string());
    const Json job = job_of(dir);
    const Outcome o = run_cli(dir, argv_of(job));
    CHECK(o.exit_code == job["expected_exit"].get<int>());
    const Json report = parse_json_text(o.out);
    CHECK(report["tool"] == "fellcp");
    CHECK(report["version"] == toolkit_version());
    if (o.exit_code == kExitOk) {
      CHECK(report["result"]["verdict"] == job["expected_verdict"]);
      CHECK(report["result"].contains("tolerance"));
      for (const auto& [key, input] : report["inputs"].items()) {
        if (!input.is_object()) continue;
        const std::string path = input["path"].get<std::string>();
        CHECK(input["sha256"] == sha256_hex(read_file((dir / path).string())));
      }
    } else {
      CHECK(report.contains("error"));
    }
  }
}

TEST_CASE("documented command examples", "[cli]") {
  const fs::path root = FIXTURES_DIR;
  const Outcome bad = run_cli(root / "group-bundle-Z3-not-pd",
                              {"check-pd", "--bundle", "bundle.json", "--map", "map.json"});
  REQUIRE(bad.exit_code == kExitOk);
  const Json r = parse_json_text(bad.out)["result"];
  CHECK(r["verdict"] == "NotPositiveDefinite");
  CHECK_THAT(r["master"]["min_eigenvalue"].get<double>(), WithinAbs(-1.0 / 3.0, 1e-9));

  const Outcome demo = run_cli(root, {"run-example", "group-bundle-Z3-pd"});
  REQUIRE(demo.exit_code == kExitOk);
  CHECK(parse_json_text(demo.out)["result"]["matches_expected"] == true);

  const fs::path exel = root / "clock-Z3-exel";
  const Outcome ind = run_cli(exel, {"induce", "--bundle", "bundle.json", "--map", "map.json"});
  REQUIRE(ind.exit_code == kExitOk);
  const Outcome cp = run_cli(exel, {"check-cp", "--bundle", "bundle.json", "--map", "map.json"});
  REQUIRE(cp.exit_code == kExitOk);
  CHECK(parse_json_text(cp.out)["result"]["verdict"] == "Positive");

  // --witness adds the negative direction
  const Outcome w = run_cli(root / "group-bundle-Z3-not-pd",
                            {"check-pd", "--bundle", "bundle.json", "--map", "map.json", "--witness"});
  CHECK(parse_json_text(w.out)["result"].contains("witness"));
}

TEST_CASE("input errors exit with code 1", "[cli]") {
  const fs::path dir = scratch();
  {
    std::ofstream f(dir / "broken.json");
    f << "{\n  \"format\": 1,\n  \"group\": \n}";
  }
  const Outcome parse = run_cli(dir, {"validate-bundle", "--bundle", "broken.json"});
  CHECK(parse.exit_code == kExitInputError);
  const Json err = parse_json_text(parse.out)["error"];
  CHECK(err["type"] == "ParseError");
  CHECK(err["line"] == 4);
  CHECK(err["input"] == "bundle");
  // the digest is reported even though the file did not parse
  CHECK(parse_json_text(parse.out)["inputs"]["bundle"]["sha256"] ==
        sha256_hex(read_file((dir / "broken.json").string())));

  CHECK(run_cli(dir, {"validate-bundle", "--bundle", "missing.json"}).exit_code == kExitInputError);
  CHECK(run_cli(dir, {"check-pd"}).exit_code == kExitInputError);
  CHECK(run_cli(dir, {"no-such-command"}).exit_code == kExitInputError);
  CHECK(run_cli(dir, {"run-example", "no-such-example"}).exit_code == kExitInputError);
}

TEST_CASE("--out writes the same bytes as stdout", "[cli]") {
  const fs::path dir = scratch();
  const fs::path out = dir / "report.json";
  fs::remove(out);
  const Outcome o = run_cli(FIXTURES_DIR, {"run-example", "transpose-M2", "--out", out.string()});
  REQUIRE(o.exit_code == kExitOk);
  CHECK(read_file(out.string()) == o.out);
}

TEST_CASE("seeds and options are echoed", "[cli]") {
  const Outcome o = run_cli(fs::path(FIXTURES_DIR) / "group-bundle-Z3-pd",
                            {"check-pd", "--bundle", "bundle.json", "--map", "map.json", "--seed",
                             "7", "--trials", "50", "--tol", "1e-8"});
  REQUIRE(o.exit_code == kExitOk);
  const Json r = parse_json_text(o.out);
  CHECK(r["options"]["seed"] == 7);
  CHECK(r["options"]["trials"] == 50);
  CHECK(r["options"]["tol"] == 1e-8);
  CHECK(r["result"]["tolerance"] == 1e-8);
  CHECK_FALSE(r.contains("timing"));
}

TEST_CASE("in-process runner matches the executable", "[cli]") {
  JobSpec job;
  job.command = "run-example";
  job.example = "clock-Z3-exel";
  const RunResult res = run(job);
  CHECK(res.exit_code == kExitOk);
  const Outcome o = run_cli(FIXTURES_DIR, {"run-example", "clock-Z3-exel"});
  CHECK(canonical_dump(res.report) == o.out);
}
