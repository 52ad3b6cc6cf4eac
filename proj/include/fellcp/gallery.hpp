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

#include <optional>
#include <string>
#include <vector>

#include "fellcp/approx.hpp"
#include "fellcp/maps.hpp"

namespace fellcp {

/**
 * A named, fully built demo. `command` is the CLI command it exercises and
 * `expected` the headline verdict that command must report; the remaining
 * fields are the inputs that command takes (unused ones stay empty).
 */
struct GalleryExample {
  std::string name;
  std::string description;
  std::string command;
  std::string expected;

  BundlePtr bundle;                    // --bundle / --source-bundle
  BundlePtr target;                    // --target-bundle, when different
  std::optional<BundleMap> map;        // --map for map commands
  std::optional<CMatrix> superop;      // --map for extract-pd
  std::optional<GroupHom> hom;         // --hom for extract-pd
  std::optional<ApproxWitness> net;    // --map for check-ap and tensor
  BundlePtr tensor_factor;             // --source-bundle for tensor
};

std::vector<std::string> gallery_names();
/** Throws Error for an unknown name. */
GalleryExample gallery_example(const std::string& name);

}  // namespace fellcp
