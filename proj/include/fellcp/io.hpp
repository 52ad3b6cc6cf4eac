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
#include "json.hpp"

namespace fellcp {

/** Insertion-ordered JSON so that reports and canonical files are stable. */
using Json = nlohmann::ordered_json;

/** The only file format version understood. */
inline constexpr int kFormatVersion = 1;

/** Malformed JSON text; line and column are 1-based. */
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string expectation);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expectation() const { return expectation_; }

 private:
  int line_;
  int column_;
  std::string expectation_;
};

/** Well-formed JSON that does not match the expected layout. */
class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& what);
  /** Dotted path of the offending field, e.g. "fibers.1[0]" or "hom". */
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Json parse_json_text(const std::string& text);
/** Throws Error if the file cannot be read. */
std::string read_file(const std::string& path);
std::string sha256_hex(const std::string& bytes);
/** Two-space indented dump with a trailing newline. */
std::string canonical_dump(const Json& j);

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j, const std::string& field);

Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j, const std::string& field = "group");

/** The raw contents of a bundle file, before the axioms are checked. */
struct BundleFile {
  std::vector<std::vector<Element>> table;
  int ambient_dim = 0;
  std::vector<std::vector<CMatrix>> fibers;
  std::optional<Json> labels;
};

BundleFile bundle_file_from_json(const Json& j);
/** Parses and validates (GroupError / BundleError on failing axioms). */
BundlePtr bundle_from_json(const Json& j, double tol = kDefaultTol);
Json bundle_to_json(const FellBundle& b, const std::optional<Json>& labels = std::nullopt);

GroupHom hom_from_json(
    const Json& j, GroupPtr domain, GroupPtr codomain, const std::string& field = "hom");
Json hom_to_json(const GroupHom& hom);
/** A file holding {"format": 1, "hom": [...]}. */
GroupHom hom_file_from_json(const Json& j, GroupPtr domain, GroupPtr codomain);

BundleMap map_from_json(const Json& j, BundlePtr source, BundlePtr target);
Json map_to_json(const BundleMap& t);

/** {"format": 1, "superop": matrix}. */
CMatrix superop_from_json(const Json& j);
Json superop_to_json(const CMatrix& m);

/** {"format": 1, "net": [map...], "bound": x, "epsilon": y}; bound and
 * epsilon are optional. */
struct NetFile {
  std::vector<BundleMap> net;
  std::optional<double> bound;
  std::optional<double> epsilon;
};
NetFile net_from_json(const Json& j, BundlePtr bundle);
Json net_to_json(const ApproxWitness& w);

}  // namespace fellcp
