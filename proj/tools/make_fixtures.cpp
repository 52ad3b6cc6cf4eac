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

// Regenerates fixtures/: one directory per gallery example holding its input
// files and a job.json with the argument vector and the expected outcome.
//
//   fellcp_fixtures <fixtures-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fellcp/cli.hpp"
#include "fellcp/gallery.hpp"

namespace fs = std::filesystem;
using namespace fellcp;

namespace {

void write(const fs::path& p, const Json& j) {
  std::ofstream f(p, std::ios::binary);
  f << canonical_dump(j);
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

Json job_json(const std::string& description, const std::vector<std::string>& argv,
              const std::string& expected, int exit_code) {
  Json j;
  j["format"] = kFormatVersion;
  j["description"] = description;
  j["argv"] = argv;
  j["expected_verdict"] = expected;
  j["expected_exit"] = exit_code;
  return j;
}

void gallery_fixture(const fs::path& root, const GalleryExample& ex) {
  const fs::path dir = root / ex.name;
  fs::create_directories(dir);
  std::vector<std::string> argv = {ex.command};
  auto add = [&](const std::string& flag, const std::string& file, const Json& j) {
    write(dir / file, j);
    argv.push_back("--" + flag);
    argv.push_back(file);
  };

  if (ex.command == "tensor") {
    add("source-bundle", "factor.json", bundle_to_json(*ex.tensor_factor));
    add("bundle", "bundle.json", bundle_to_json(*ex.bundle));
  } else if (ex.command == "extract-pd") {
    add("source-bundle", "bundle.json", bundle_to_json(*ex.bundle));
  } else {
    add("bundle", "bundle.json", bundle_to_json(*ex.bundle));
  }
  if (ex.target) add("target-bundle", "target.json", bundle_to_json(*ex.target));
  if (ex.hom) {
    Json h;
    h["format"] = kFormatVersion;
    h["hom"] = hom_to_json(*ex.hom);
    add("hom", "hom.json", h);
  }
  if (ex.map) add("map", "map.json", map_to_json(*ex.map));
  if (ex.superop) add("map", "superop.json", superop_to_json(*ex.superop));
  if (ex.net) add("map", "net.json", net_to_json(*ex.net));
  argv.insert(argv.end(), {"--seed", "0"});
  write(dir / "job.json", job_json(ex.description, argv, ex.expected, kExitOk));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fellcp_fixtures <fixtures-dir>\n";
    return 1;
  }
  const fs::path root = argv[1];
  try {
    for (const auto& name : gallery_names()) gallery_fixture(root, gallery_example(name));

    // the packaged demo, through run-example
    fs::create_directories(root / "run-example-Z3");
    write(root / "run-example-Z3" / "job.json",
          job_json("run-example on the packaged Z_3 demo",
                   {"run-example", "--example", "group-bundle-Z3-pd", "--seed", "0"},
                   "PositiveDefinite", kExitOk));

    // span{E_12} is not closed under adjoints
    {
      const fs::path dir = root / "invalid-bundle-E12";
      fs::create_directories(dir);
      Json b;
      b["format"] = kFormatVersion;
      b["group"] = {{"order", 1}, {"table", {{0}}}};
      b["ambient_dim"] = 2;
      b["fibers"] = {{"0", Json::array({matrix_to_json(matrix_unit(2, 0, 1))})}};
      b["labels"] = {"e"};
      write(dir / "bundle.json", b);
      write(dir / "job.json",
            job_json("span{E_12} over the trivial group", {"validate-bundle", "--bundle", "bundle.json"},
                     "Invalid", kExitOk));
    }

    // a map whose hom has the wrong length is rejected before any computation
    {
      const GalleryExample ex = gallery_example("group-bundle-Z3-pd");
      const fs::path dir = root / "schema-error-hom";
      fs::create_directories(dir);
      write(dir / "bundle.json", bundle_to_json(*ex.bundle));
      Json m = map_to_json(*ex.map);
      m["hom"] = {0, 1};
      write(dir / "map.json", m);
      write(dir / "job.json",
            job_json("hom array of the wrong length",
                     {"check-pd", "--bundle", "bundle.json", "--map", "map.json"}, "",
                     kExitInputError));
    }
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return 1;
  }
  return 0;
}
