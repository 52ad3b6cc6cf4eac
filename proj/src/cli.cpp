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

#include "fellcp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "fellcp/approx.hpp"
#include "fellcp/gallery.hpp"

#ifndef FELLCP_VERSION
#define FELLCP_VERSION "0.0.0"
#endif

namespace fellcp {

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {
      "validate-bundle", "build-algebra", "check-pd",   "check-cp",  "induce",
      "check-morphism",  "extract-pd",    "run-example", "check-ap", "tensor"};
  return cmds;
}

std::string toolkit_version() { return FELLCP_VERSION; }

namespace {

/** Everything a command may consume, whether read from files or built. */
struct Inputs {
  BundlePtr bundle;
  BundlePtr target;
  BundlePtr tensor_factor;
  std::optional<BundleFile> raw_bundle;  // validate-bundle only
  std::optional<BundleMap> map;
  std::optional<CMatrix> superop;
  std::optional<GroupHom> hom;
  std::optional<ApproxWitness> net;
  std::optional<Json> labels;
};

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const CVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(complex_json(v(i)));
  return j;
}

Json certificate_json(const PsdCertificate& c, bool with_witness) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["min_eigenvalue"] = c.min_eigenvalue;
  j["tolerance"] = c.tolerance_used;
  j["scale"] = c.scale;
  j["asymmetry"] = c.asymmetry;
  if (with_witness && c.witness) j["witness"] = vector_json(*c.witness);
  return j;
}

Json morphism_json(const MorphismReport& r) {
  Json j;
  j["multiplicative"] = r.multiplicative;
  j["self_adjoint"] = r.self_adjoint;
  j["max_defect"] = r.max_defect;
  j["witness"] = r.witness;
  return j;
}

Json witness_report_json(const WitnessReport& r, double tol) {
  Json j;
  j["verdict"] = r.passed() ? "Passed" : "Failed";
  j["tolerance"] = tol;
  j["positive_definite"] = r.positive_definite;
  j["bounded"] = r.bounded;
  j["converges"] = r.converges;
  Json pd = Json::array();
  for (bool b : r.element_pd) pd.push_back(b);
  j["element_pd"] = std::move(pd);
  j["supports"] = r.supports;
  j["sup_norm_Te"] = r.sup_norm_Te;
  j["bound"] = r.bound;
  j["deviation"] = r.deviation;
  j["epsilon"] = r.epsilon;
  j["message"] = r.message;
  return j;
}

Json bundle_summary(const FellBundle& b) {
  Json j;
  j["group_order"] = b.group().order();
  j["ambient_dim"] = b.ambient_dim();
  j["fiber_dims"] = fiber_dim_vector(b);
  j["total_dim"] = b.total_dim();
  const CMatrix id = CMatrix::Identity(b.ambient_dim(), b.ambient_dim());
  j["unit_is_identity"] = (b.unit() - id).norm() <= 1e-12;
  return j;
}

const BundlePtr& source_of(const Inputs& in) {
  if (!in.bundle) throw Error("a source bundle is required (--bundle)");
  return in.bundle;
}

const BundlePtr& target_of(const Inputs& in) { return in.target ? in.target : source_of(in); }

const BundleMap& map_of(const Inputs& in) {
  if (!in.map) throw Error("a bundle map is required (--map)");
  return *in.map;
}

/** Terminal-element norm used for the default bound. */
double terminal_norm(const BundleMap& t, double tol) {
  const Element e = t.source().group().identity();
  if (t.source().fiber_dim(e) == 0) return 0.0;
  if (pd_check_master(t, tol).positive_definite()) return op_norm(t.apply(e, t.source().unit()));
  return fiber_map_norm(t, e).lower_bound;
}

// ---------------------------------------------------------------------------

Json cmd_validate_bundle(const Inputs& in, const JobSpec& job) {
  Json j;
  try {
    BundlePtr b;
    if (in.raw_bundle) {
      BundleFile f = *in.raw_bundle;
      b = validate_bundle(make_group(f.table), f.ambient_dim, std::move(f.fibers), job.tol);
    } else {
      b = source_of(in);
    }
    j["verdict"] = "Valid";
    j["tolerance"] = job.tol;
    const Json summary = bundle_summary(*b);
    for (const auto& [k, v] : summary.items()) j[k] = v;
  } catch (const GroupError& err) {
    j["verdict"] = "Invalid";
    j["tolerance"] = job.tol;
    j["error_kind"] = "GroupError." + to_string(err.kind());
    j["witness"] = err.witness();
    j["message"] = err.what();
  } catch (const BundleError& err) {
    j["verdict"] = "Invalid";
    j["tolerance"] = job.tol;
    j["error_kind"] = "BundleError." + to_string(err.kind());
    j["witness"] = err.witness();
    j["message"] = err.what();
  }
  if (in.labels) j["labels"] = *in.labels;
  return j;
}

Json cmd_build_algebra(const Inputs& in, const JobSpec& job) {
  const AlgebraPtr alg = build_algebra(source_of(in), job.tol);
  const int center = center_dimension(*alg);
  Json j;
  j["verdict"] = "Built";
  j["tolerance"] = job.tol;
  j["dim"] = alg->dim();
  j["big_dim"] = alg->big_dim();
  j["center_dim"] = center;
  j["commutative"] = center == alg->dim();
  j["unit_norm"] = algebra_norm(alg->unit());
  return j;
}

Json cmd_check_pd(const Inputs& in, const JobSpec& job) {
  const BundleMap& t = map_of(in);
  const PdReport r = pd_check(t, job.tol, {job.trials, job.max_n, job.seed});
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["tolerance"] = job.tol;
  j["master"] = certificate_json(r.master_certificate, false);
  j["master"]["size"] = t.source().total_dim() * t.target().ambient_dim();
  Json oracle;
  oracle["trials"] = r.oracle_trials;
  oracle["max_n"] = job.max_n;
  oracle["seed"] = job.seed;
  oracle["min_value"] = r.oracle_min;
  oracle["consistent"] = !r.positive_definite() || r.oracle_min >= -job.tol;
  j["oracle"] = std::move(oracle);
  j["self_adjoint_defect"] = max_map_distance(adjoint_map(t), t);

  const NormData nd = norm_data(t, job.tol, job.seed);
  Json norms;
  norms["norm_Te"] = nd.norm_Te;
  norms["norm_Te_exact"] = nd.norm_Te_exact;
  norms["sup_norm_Tg"] = nd.sup_norm_Tg;
  norms["sup_converged"] = nd.sup_converged;
  if (r.positive_definite()) norms["norm_MT_on_unit"] = nd.norm_MT_on_unit;
  j["norms"] = std::move(norms);

  if (job.witness && r.witness) {
    Json w;
    w["tuple"] = r.witness->tuple;
    Json idx = Json::array();
    for (const auto& [g, k] : r.witness->index) idx.push_back(Json::array({g, k}));
    w["index"] = std::move(idx);
    w["vector"] = vector_json(r.witness->vector);
    j["witness"] = std::move(w);
  }
  return j;
}

Json cmd_check_cp(const Inputs& in, const JobSpec& job) {
  const BundleMap& t = map_of(in);
  const AlgebraMap m =
      induce(t, build_algebra(t.source_ptr(), job.tol), build_algebra(t.target_ptr(), job.tol));
  const PsdCertificate cert = cp_check(m, job.tol);
  const PdReport pd = pd_check_master(t, job.tol);
  Json j;
  j["verdict"] = to_string(cert.verdict);
  j["tolerance"] = job.tol;
  j["certificate"] = certificate_json(cert, job.witness);
  j["block_size"] = m.source().dim() * m.target().big_dim();
  j["pd_verdict"] = to_string(pd.verdict);
  j["agrees_with_pd"] = cert.positive() == pd.positive_definite();
  return j;
}

Json cmd_induce(const Inputs& in, const JobSpec& job) {
  const BundleMap& t = map_of(in);
  const AlgebraMap m =
      induce(t, build_algebra(t.source_ptr(), job.tol), build_algebra(t.target_ptr(), job.tol));
  Json j;
  j["verdict"] = "Induced";
  j["tolerance"] = job.tol;
  j["source_dim"] = m.source().dim();
  j["target_dim"] = m.target().dim();
  j["superop"] = matrix_to_json(m.superop());
  return j;
}

Json cmd_check_morphism(const Inputs& in, const JobSpec& job) {
  const BundleMap& t = map_of(in);
  const MorphismReport r = is_morphism(t, job.tol);
  Json j;
  j["verdict"] = r.is_morphism() ? "Morphism" : "NotMorphism";
  j["tolerance"] = job.tol;
  j["bundle_map"] = morphism_json(r);
  const AlgebraMap m =
      induce(t, build_algebra(t.source_ptr(), job.tol), build_algebra(t.target_ptr(), job.tol));
  j["induced_map"] = morphism_json(is_star_homomorphism(m, job.tol));
  return j;
}

Json cmd_extract_pd(const Inputs& in, const JobSpec& job) {
  if (!in.superop) throw Error("a superoperator file is required (--map)");
  const BundlePtr& src = source_of(in);
  const BundlePtr& tgt = target_of(in);
  const GroupHom hom = in.hom ? *in.hom : GroupHom::identity(src->group_ptr());
  const AlgebraMap m(build_algebra(src, job.tol), build_algebra(tgt, job.tol), *in.superop);
  const BundleMap t = extract_pd_from_cp(m, hom);
  const PdReport pd = pd_check_master(t, job.tol);
  const PsdCertificate cp = cp_check(m, job.tol);
  Json j;
  j["verdict"] = to_string(pd.verdict);
  j["tolerance"] = job.tol;
  j["master"] = certificate_json(pd.master_certificate, job.witness);
  j["cp_certificate"] = certificate_json(cp, false);
  const Json body = map_to_json(t);
  j["hom"] = body["hom"];
  j["blocks"] = body["blocks"];
  return j;
}

ApproxWitness witness_of(const Inputs& in, const BundlePtr& bundle) {
  if (in.net) return *in.net;
  return auto_witness(bundle);
}

Json cmd_check_ap(const Inputs& in, const JobSpec& job) {
  const BundlePtr& b = source_of(in);
  const ApproxWitness w = witness_of(in, b);
  Json j = witness_report_json(check_witness(w, job.tol), job.tol);
  j["net_source"] = in.net ? "file" : "auto";
  j["net_length"] = w.net.size();
  const NuclearityNote n = nuclearity_note(*b);
  Json nj;
  nj["unit_fiber_dim"] = n.unit_fiber_dim;
  nj["algebra_dim"] = n.algebra_dim;
  nj["unit_fiber_nuclear"] = n.unit_fiber_nuclear;
  nj["algebra_nuclear"] = n.algebra_nuclear;
  nj["note"] = n.note;
  j["nuclearity"] = std::move(nj);
  return j;
}

Json cmd_tensor(const Inputs& in, const JobSpec& job) {
  if (!in.tensor_factor) throw Error("tensor needs the factor C (--source-bundle)");
  const FellBundle& cb = *in.tensor_factor;
  if (cb.group().order() != 1) throw Error("the factor C must be a bundle over the trivial group");
  const BundlePtr& b = source_of(in);
  const MatSubspace& c = cb.fiber(cb.group().identity());
  const BundlePtr tb = tensor_bundle(c, *b, job.tol);
  const ApproxWitness w = witness_of(in, b);
  const WitnessReport base = check_witness(w, job.tol);
  const WitnessReport moved = check_witness(transport_witness(w, c, tb), job.tol);
  Json j;
  j["verdict"] = moved.passed() ? "Passed" : "Failed";
  j["tolerance"] = job.tol;
  Json tj = bundle_summary(*tb);
  tj["algebra_dim"] = build_algebra(tb, job.tol)->dim();
  j["tensor_bundle"] = std::move(tj);
  j["net_source"] = in.net ? "file" : "auto";
  j["base_witness"] = witness_report_json(base, job.tol);
  j["transported_witness"] = witness_report_json(moved, job.tol);
  j["same_bound"] = base.bound == moved.bound;
  return j;
}

Json dispatch(const std::string& command, const Inputs& in, const JobSpec& job) {
  if (command == "validate-bundle") return cmd_validate_bundle(in, job);
  if (command == "build-algebra") return cmd_build_algebra(in, job);
  if (command == "check-pd") return cmd_check_pd(in, job);
  if (command == "check-cp") return cmd_check_cp(in, job);
  if (command == "induce") return cmd_induce(in, job);
  if (command == "check-morphism") return cmd_check_morphism(in, job);
  if (command == "extract-pd") return cmd_extract_pd(in, job);
  if (command == "check-ap") return cmd_check_ap(in, job);
  if (command == "tensor") return cmd_tensor(in, job);
  throw Error("unknown command '" + command + "'");
}

// ---------------------------------------------------------------------------

struct LoadedFile {
  std::string path;
  std::string sha256;
  Json json;
};

/** Reads and parses every referenced file before anything is computed. */
std::map<std::string, LoadedFile> load_files(
    const JobSpec& job, std::string& current, Json& digests) {
  static const std::set<std::string> allowed = {
      "bundle", "source-bundle", "target-bundle", "map", "hom"};
  std::map<std::string, LoadedFile> files;
  for (const auto& [key, path] : job.inputs) {
    if (!allowed.count(key)) throw Error("unknown input '" + key + "'");
    if (path.empty()) continue;
    current = key;
    const std::string text = read_file(path);
    const std::string digest = sha256_hex(text);
    // digest goes into the report even if the parse below fails
    digests[key] = Json{{"path", path}, {"sha256", digest}};
    files[key] = LoadedFile{path, digest, parse_json_text(text)};
  }
  current.clear();
  return files;
}

Inputs build_inputs(
    const JobSpec& job, const std::map<std::string, LoadedFile>& files, std::string& current) {
  Inputs in;
  const std::string& cmd = job.command;
  auto has = [&](const std::string& k) { return files.count(k) > 0; };
  auto json = [&](const std::string& k) -> const Json& {
    current = k;
    return files.at(k).json;
  };

  std::string source_key;
  if (cmd == "tensor") {
    if (has("source-bundle")) in.tensor_factor = bundle_from_json(json("source-bundle"), job.tol);
    source_key = "bundle";
  } else {
    if (has("bundle") && has("source-bundle")) {
      throw Error("give either --bundle or --source-bundle, not both");
    }
    source_key = has("source-bundle") ? "source-bundle" : "bundle";
  }
  if (!has(source_key)) throw Error("a source bundle is required (--bundle)");

  if (cmd == "validate-bundle") {
    in.raw_bundle = bundle_file_from_json(json(source_key));
    in.labels = in.raw_bundle->labels;
    current.clear();
    return in;
  }
  in.bundle = bundle_from_json(json(source_key), job.tol);
  if (has("target-bundle")) in.target = bundle_from_json(json("target-bundle"), job.tol);
  const BundlePtr tgt = in.target ? in.target : in.bundle;

  if (has("hom")) in.hom = hom_file_from_json(json("hom"), in.bundle->group_ptr(), tgt->group_ptr());

  if (has("map")) {
    const Json& mj = json("map");
    if (cmd == "extract-pd") {
      in.superop = superop_from_json(mj);
    } else if (cmd == "check-ap" || cmd == "tensor") {
      NetFile nf = net_from_json(mj, in.bundle);
      ApproxWitness w{in.bundle, std::move(nf.net), 0.0, nf.epsilon.value_or(1e-8)};
      w.bound = nf.bound ? *nf.bound : 1.0 + terminal_norm(w.net.back(), job.tol);
      in.net = std::move(w);
    } else {
      in.map = map_from_json(mj, in.bundle, tgt);
    }
  }
  current.clear();
  return in;
}

Inputs inputs_from_example(const GalleryExample& ex) {
  Inputs in;
  in.bundle = ex.bundle;
  in.target = ex.target;
  in.tensor_factor = ex.tensor_factor;
  in.map = ex.map;
  in.superop = ex.superop;
  in.hom = ex.hom;
  in.net = ex.net;
  return in;
}

Json error_json(const std::string& type, const std::string& message) {
  Json j;
  j["type"] = type;
  j["message"] = message;
  return j;
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult res;
  Json& rep = res.report;
  rep["tool"] = "fellcp";
  rep["version"] = toolkit_version();
  rep["command"] = job.command;
  Json options;
  options["tol"] = job.tol;
  options["seed"] = job.seed;
  options["trials"] = job.trials;
  options["max_n"] = job.max_n;
  options["witness"] = job.witness;
  rep["options"] = std::move(options);
  rep["inputs"] = Json::object();

  const auto start = std::chrono::steady_clock::now();
  std::string current;
  try {
    if (std::find(known_commands().begin(), known_commands().end(), job.command) ==
        known_commands().end()) {
      throw Error("unknown command '" + job.command + "'");
    }
    if (job.tol <= 0.0 || !std::isfinite(job.tol)) throw Error("--tol must be positive");
    if (job.trials < 0) throw Error("--trials must be non-negative");
    if (job.max_n < 1) throw Error("--max-n must be at least 1");

    if (job.command == "run-example") {
      if (job.example.empty()) throw Error("run-example needs --example <name>");
      rep["inputs"]["example"] = job.example;
      const GalleryExample ex = gallery_example(job.example);
      const Json inner = dispatch(ex.command, inputs_from_example(ex), job);
      Json r;
      r["example"] = ex.name;
      r["description"] = ex.description;
      r["example_command"] = ex.command;
      r["expected"] = ex.expected;
      r["verdict"] = inner["verdict"];
      r["tolerance"] = job.tol;
      r["matches_expected"] = inner["verdict"] == ex.expected;
      r["details"] = inner;
      rep["result"] = std::move(r);
    } else {
      const auto files = load_files(job, current, rep["inputs"]);
      const Inputs in = build_inputs(job, files, current);
      rep["result"] = dispatch(job.command, in, job);
    }
  } catch (const ParseError& err) {
    Json e = error_json("ParseError", err.what());
    e["line"] = err.line();
    e["column"] = err.column();
    e["expectation"] = err.expectation();
    if (!current.empty()) e["input"] = current;
    rep["error"] = std::move(e);
    res.exit_code = kExitInputError;
  } catch (const SchemaError& err) {
    Json e = error_json("SchemaError", err.what());
    e["field"] = err.field();
    if (!current.empty()) e["input"] = current;
    rep["error"] = std::move(e);
    res.exit_code = kExitInputError;
  } catch (const GroupError& err) {
    Json e = error_json("GroupError", err.what());
    e["kind"] = to_string(err.kind());
    e["witness"] = err.witness();
    if (!current.empty()) e["input"] = current;
    rep["error"] = std::move(e);
    res.exit_code = kExitInputError;
  } catch (const BundleError& err) {
    Json e = error_json("BundleError", err.what());
    e["kind"] = to_string(err.kind());
    e["witness"] = err.witness();
    if (!current.empty()) e["input"] = current;
    rep["error"] = std::move(e);
    res.exit_code = kExitInputError;
  } catch (const Error& err) {
    Json e = error_json("InputError", err.what());
    if (!current.empty()) e["input"] = current;
    rep["error"] = std::move(e);
    res.exit_code = kExitInputError;
  } catch (const NumericError& err) {
    rep["error"] = error_json("NumericError", err.what());
    res.exit_code = kExitNumericError;
  } catch (const std::exception& err) {
    rep["error"] = error_json("InternalError", err.what());
    res.exit_code = kExitNumericError;
  }
  if (job.timing) {
    const auto stop = std::chrono::steady_clock::now();
    rep["timing_ms"] =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  return res;
}

}  // namespace fellcp
