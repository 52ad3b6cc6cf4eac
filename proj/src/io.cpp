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

#include "fellcp/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fellcp {

ParseError::ParseError(int line, int column, std::string expectation)
    : Error("parse error at line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + expectation),
      line_(line),
      column_(column),
      expectation_(std::move(expectation)) {}

SchemaError::SchemaError(std::string field, const std::string& what)
    : Error("schema error at '" + field + "': " + what), field_(std::move(field)) {}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    // err.byte is the 1-based offset of the offending character
    const std::size_t stop = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = err.what();
    const auto colon = msg.find(": ", msg.find("column"));
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError(line, column, msg);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw NumericError("SHA-256 digest failed");
  }
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) {
    ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return ss.str();
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

namespace {

void require_format(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "expected an object");
  if (!j.contains("format")) throw SchemaError("format", "missing");
  if (!j["format"].is_number_integer() || j["format"].get<int>() != kFormatVersion) {
    throw SchemaError("format", "unsupported format version");
  }
}

const Json& field_of(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(path, "missing");
  return j[key];
}

int int_of(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

double real_of(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(path, "not finite");
  return v;
}

Complex complex_of(const Json& j, const std::string& path) {
  if (j.is_number()) return {real_of(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected [re, im]");
  return {real_of(j[0], path + "[0]"), real_of(j[1], path + "[1]")};
}

std::vector<Element> int_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  std::vector<Element> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(int_of(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

/** Empty matrices are written as [] whatever their shape. */
CMatrix shaped(const CMatrix& m, int rows, int cols, const std::string& path) {
  if (m.size() == 0 && static_cast<long>(rows) * cols == 0) return CMatrix::Zero(rows, cols);
  if (m.rows() != rows || m.cols() != cols) {
    throw SchemaError(
        path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
  return m;
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError(field, "expected a matrix (array of rows)");
  if (j.empty()) return CMatrix(0, 0);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  CMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) throw SchemaError(rp, "ragged or malformed row");
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = complex_of(j[i][k], rp + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["table"] = g.table();
  return j;
}

GroupPtr group_from_json(const Json& j, const std::string& field) {
  const int order = int_of(field_of(j, "order", field + ".order"), field + ".order");
  const Json& t = field_of(j, "table", field + ".table");
  if (!t.is_array()) throw SchemaError(field + ".table", "expected an array of rows");
  std::vector<std::vector<Element>> table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    table.push_back(int_array(t[i], field + ".table[" + std::to_string(i) + "]"));
  }
  if (static_cast<int>(table.size()) != order) {
    throw SchemaError(field + ".table", "row count differs from order");
  }
  return make_group(table);
}

BundleFile bundle_file_from_json(const Json& j) {
  require_format(j);
  BundleFile f;
  const Json& g = field_of(j, "group", "group");
  const int order = int_of(field_of(g, "order", "group.order"), "group.order");
  const Json& t = field_of(g, "table", "group.table");
  if (!t.is_array()) throw SchemaError("group.table", "expected an array of rows");
  for (std::size_t i = 0; i < t.size(); ++i) {
    f.table.push_back(int_array(t[i], "group.table[" + std::to_string(i) + "]"));
  }
  if (static_cast<int>(f.table.size()) != order) {
    throw SchemaError("group.table", "row count differs from order");
  }
  f.ambient_dim = int_of(field_of(j, "ambient_dim", "ambient_dim"), "ambient_dim");
  if (f.ambient_dim < 1) throw SchemaError("ambient_dim", "must be positive");
  const Json& fibers = field_of(j, "fibers", "fibers");
  if (!fibers.is_object()) throw SchemaError("fibers", "expected an object keyed by element");
  for (auto it = fibers.begin(); it != fibers.end(); ++it) {
    bool known = false;
    for (int e = 0; e < order && !known; ++e) known = it.key() == std::to_string(e);
    if (!known) throw SchemaError("fibers." + it.key(), "not a group element");
  }
  f.fibers.resize(order);
  for (int e = 0; e < order; ++e) {
    const std::string key = std::to_string(e);
    const std::string path = "fibers." + key;
    if (!fibers.contains(key)) continue;  // zero fiber
    const Json& list = fibers[key];
    if (!list.is_array()) throw SchemaError(path, "expected a list of matrices");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string mp = path + "[" + std::to_string(k) + "]";
      f.fibers[e].push_back(
          shaped(matrix_from_json(list[k], mp), f.ambient_dim, f.ambient_dim, mp));
    }
  }
  if (j.contains("labels")) f.labels = j["labels"];
  return f;
}

BundlePtr bundle_from_json(const Json& j, double tol) {
  BundleFile f = bundle_file_from_json(j);
  return validate_bundle(make_group(f.table), f.ambient_dim, std::move(f.fibers), tol);
}

Json bundle_to_json(const FellBundle& b, const std::optional<Json>& labels) {
  Json j;
  j["format"] = kFormatVersion;
  j["group"] = group_to_json(b.group());
  j["ambient_dim"] = b.ambient_dim();
  Json fibers = Json::object();
  for (int g = 0; g < b.group().order(); ++g) {
    Json list = Json::array();
    for (const CMatrix& m : b.fiber(g).basis()) list.push_back(matrix_to_json(m));
    fibers[std::to_string(g)] = std::move(list);
  }
  j["fibers"] = std::move(fibers);
  if (labels) j["labels"] = *labels;
  return j;
}

GroupHom hom_from_json(
    const Json& j, GroupPtr domain, GroupPtr codomain, const std::string& field) {
  const std::vector<Element> image = int_array(j, field);
  if (static_cast<int>(image.size()) != domain->order()) {
    throw SchemaError(field, "expected one image per source group element");
  }
  return GroupHom::validate(image, std::move(domain), std::move(codomain));
}

Json hom_to_json(const GroupHom& hom) { return Json(hom.image()); }

GroupHom hom_file_from_json(const Json& j, GroupPtr domain, GroupPtr codomain) {
  require_format(j);
  return hom_from_json(field_of(j, "hom", "hom"), std::move(domain), std::move(codomain));
}

namespace {

BundleMap map_body(const Json& j, BundlePtr source, BundlePtr target, const std::string& prefix) {
  GroupHom hom = hom_from_json(
      field_of(j, "hom", prefix + "hom"), source->group_ptr(), target->group_ptr(),
      prefix + "hom");
  const Json& bj = field_of(j, "blocks", prefix + "blocks");
  if (!bj.is_object()) throw SchemaError(prefix + "blocks", "expected an object keyed by element");
  std::vector<CMatrix> blocks;
  for (int g = 0; g < source->group().order(); ++g) {
    const std::string key = std::to_string(g);
    const std::string path = prefix + "blocks." + key;
    const int rows = target->fiber_dim(hom(g));
    const int cols = source->fiber_dim(g);
    if (!bj.contains(key)) {
      if (static_cast<long>(rows) * cols != 0) throw SchemaError(path, "missing");
      blocks.push_back(CMatrix::Zero(rows, cols));
      continue;
    }
    blocks.push_back(shaped(matrix_from_json(bj[key], path), rows, cols, path));
  }
  return BundleMap(std::move(source), std::move(target), std::move(hom), std::move(blocks));
}

Json map_body_json(const BundleMap& t) {
  Json j;
  j["hom"] = hom_to_json(t.hom());
  Json blocks = Json::object();
  for (int g = 0; g < t.source().group().order(); ++g) {
    blocks[std::to_string(g)] = matrix_to_json(t.block(g));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

}  // namespace

BundleMap map_from_json(const Json& j, BundlePtr source, BundlePtr target) {
  require_format(j);
  return map_body(j, std::move(source), std::move(target), "");
}

Json map_to_json(const BundleMap& t) {
  Json j;
  j["format"] = kFormatVersion;
  const Json body = map_body_json(t);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

CMatrix superop_from_json(const Json& j) {
  require_format(j);
  return matrix_from_json(field_of(j, "superop", "superop"), "superop");
}

Json superop_to_json(const CMatrix& m) {
  Json j;
  j["format"] = kFormatVersion;
  j["superop"] = matrix_to_json(m);
  return j;
}

NetFile net_from_json(const Json& j, BundlePtr bundle) {
  require_format(j);
  NetFile f;
  const Json& net = field_of(j, "net", "net");
  if (!net.is_array() || net.empty()) throw SchemaError("net", "expected a non-empty array");
  for (std::size_t i = 0; i < net.size(); ++i) {
    f.net.push_back(map_body(net[i], bundle, bundle, "net[" + std::to_string(i) + "]."));
  }
  if (j.contains("bound")) f.bound = real_of(j["bound"], "bound");
  if (j.contains("epsilon")) f.epsilon = real_of(j["epsilon"], "epsilon");
  return f;
}

Json net_to_json(const ApproxWitness& w) {
  Json j;
  j["format"] = kFormatVersion;
  Json net = Json::array();
  for (const BundleMap& t : w.net) net.push_back(map_body_json(t));
  j["net"] = std::move(net);
  j["bound"] = w.bound;
  j["epsilon"] = w.epsilon;
  return j;
}

}  // namespace fellcp
