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

#include "catch_amalgamated.hpp"
#include "fellcp/gallery.hpp"
#include "fellcp/io.hpp"
#include "zoo.hpp"

using namespace fellcp;
using namespace fellcp::testing;

namespace {

std::string schema_field(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& err) {
    return err.field();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("sha256 matches the published test vectors", "[io]") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("parse errors carry line and column", "[io]") {
  try {
    parse_json_text("{\n  \"a\": ,\n}");
    FAIL("parsed invalid JSON");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 8);
    CHECK_FALSE(err.expectation().empty());
  }
  try {
    parse_json_text("[1, 2");
    FAIL("parsed truncated JSON");
  } catch (const ParseError& err) {
    CHECK(err.line() == 1);
  }
}

TEST_CASE("group and bundle files", "[io]") {
  const GroupPtr z2 = group_from_json(parse_json_text(R"({"order":2,"table":[[0,1],[1,0]]})"));
  CHECK(z2->order() == 2);
  CHECK(*z2 == *cyclic_group(2));

  const Json b = parse_json_text(R"({
    "format": 1,
    "group": {"order": 2, "table": [[0,1],[1,0]]},
    "ambient_dim": 2,
    "fibers": {
      "0": [ [[[1,0],[0,0]],[[0,0],[0,0]]], [[[0,0],[0,0]],[[0,0],[1,0]]] ],
      "1": [ [[[0,0],[1,0]],[[0,0],[0,0]]], [[[0,0],[0,0]],[[1,0],[0,0]]] ]
    },
    "labels": ["even", "odd"]
  })");
  const BundlePtr bundle = bundle_from_json(b);
  CHECK(fiber_dim_vector(*bundle) == std::vector<int>{2, 2});
  CHECK(same_bundle(*bundle, *parity_grading(1, 1)));
  CHECK(bundle_file_from_json(b).labels.has_value());

  // missing fiber keys are zero fibers
  const Json sparse = parse_json_text(R"({"format":1,"group":{"order":4,"table":
      [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},"ambient_dim":1,
      "fibers":{"0":[[[1]]],"2":[[[1]]]}})");
  CHECK(fiber_dim_vector(*bundle_from_json(sparse)) == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("schema errors name the offending field", "[io]") {
  const GalleryExample ex = gallery_example("group-bundle-Z3-pd");
  const BundlePtr b = ex.bundle;
  Json m = map_to_json(*ex.map);
  m["hom"] = {0, 1};
  CHECK(schema_field([&] { map_from_json(m, b, b); }) == "hom");

  Json bj = bundle_to_json(*b);
  bj.erase("ambient_dim");
  CHECK(schema_field([&] { bundle_from_json(bj); }) == "ambient_dim");

  bj = bundle_to_json(*b);
  bj["format"] = 2;
  CHECK(schema_field([&] { bundle_from_json(bj); }) == "format");

  bj = bundle_to_json(*b);
  bj["fibers"]["7"] = Json::array();
  CHECK(schema_field([&] { bundle_from_json(bj); }) == "fibers.7");

  bj = bundle_to_json(*b);
  bj["group"]["table"] = {{0, 1, 2}};
  CHECK(schema_field([&] { bundle_from_json(bj); }) == "group.table");

  CHECK(schema_field([&] { matrix_from_json(parse_json_text("[[1, 2], [3]]"), "m"); }) == "m[1]");
  CHECK(schema_field([&] { matrix_from_json(parse_json_text(R"([["x"]])"), "m"); }) == "m[0][0]");
}

TEST_CASE("serialize(parse(x)) is idempotent on canonical form", "[io]") {
  for (const auto& [name, b] : bundle_zoo()) {
    INFO(name);
    const std::string once = canonical_dump(bundle_to_json(*b));
    const BundlePtr back = bundle_from_json(parse_json_text(once));
    CHECK(canonical_dump(bundle_to_json(*back)) == once);
    CHECK(same_bundle(*back, *b, 0.0));
  }
  Rng rng = keyed_rng(61, 0);
  for (const MapCase& mc : map_cases(24, 61)) {
    INFO(mc.label);
    const std::string once = canonical_dump(map_to_json(mc.map));
    const BundleMap back =
        map_from_json(parse_json_text(once), mc.map.source_ptr(), mc.map.target_ptr());
    CHECK(canonical_dump(map_to_json(back)) == once);
    CHECK(max_map_distance(back, mc.map) == 0.0);
  }
  const CMatrix s = random_cmatrix(rng, 3, 4);
  CHECK((superop_from_json(parse_json_text(canonical_dump(superop_to_json(s)))) - s).norm() == 0.0);

  const GalleryExample gx = gallery_example("auto-witness-clock-Z2");
  REQUIRE(gx.net.has_value());
  const std::string net_once = canonical_dump(net_to_json(*gx.net));
  const NetFile nf = net_from_json(parse_json_text(net_once), gx.bundle);
  ApproxWitness w{gx.bundle, nf.net, nf.bound.value_or(0.0), nf.epsilon.value_or(1e-8)};
  CHECK(canonical_dump(net_to_json(w)) == net_once);

  const GroupHom h = GroupHom::validate({0, 1, 0, 1}, cyclic_group(4), cyclic_group(2));
  Json hj;
  hj["format"] = kFormatVersion;
  hj["hom"] = hom_to_json(h);
  CHECK(hom_file_from_json(hj, cyclic_group(4), cyclic_group(2)).image() == h.image());
}

TEST_CASE("canonical dumps are stable", "[io]") {
  const Json j = parse_json_text(R"({"b": [1, 2.5], "a": {"z": null, "y": true}})");
  // insertion order is kept, not sorted
  CHECK(canonical_dump(j) ==
        "{\n  \"b\": [\n    1,\n    2.5\n  ],\n  \"a\": {\n    \"z\": null,\n    \"y\": true\n  }\n}\n");
  CHECK(matrix_to_json(CMatrix(0, 0)) == Json::array());
}
