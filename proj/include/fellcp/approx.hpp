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

#include <string>
#include <vector>

#include "fellcp/maps.hpp"

namespace fellcp {

/**
 * A finite stand-in for an approximating net: every element should be a
 * positive definite map B -> B over id_G, the unit-fiber norms bounded by
 * `bound`, and the last element within `epsilon` of the identity on every
 * fiber basis element.
 *
 * Checking basis elements only is enough once the net is uniformly bounded:
 * for b = sum c_k b_k the deviation is at most (sum |c_k|) times the basis
 * deviation, and the constant depends on the fiber alone.
 */
struct ApproxWitness {
  BundlePtr bundle;
  std::vector<BundleMap> net;
  double bound = 0.0;
  double epsilon = 1e-8;
};

struct WitnessReport {
  bool positive_definite = false;  // every element pd
  bool bounded = false;            // sup ||T_e|| <= bound
  bool converges = false;          // terminal deviation <= epsilon
  std::vector<bool> element_pd;
  std::vector<std::vector<Element>> supports;
  double sup_norm_Te = 0.0;
  double deviation = 0.0;
  double bound = 0.0;
  double epsilon = 0.0;
  std::string message;

  bool passed() const { return positive_definite && bounded && converges; }
};

WitnessReport check_witness(const ApproxWitness& w, double tol = kDefaultTol);

/** max over g, basis k of ||T_g(b_k) - b_k||_op for a map B -> B. */
double identity_deviation(const BundleMap& t);

/**
 * The one-element net {T} with T the Exel map of the constant function
 * p_e / sqrt|G|, which is the fiberwise identity. Every finite group is
 * amenable, so a witness always exists; bound = 1 + ||T_e||.
 */
ApproxWitness auto_witness(BundlePtr bundle, double epsilon = 1e-8);

/**
 * C (x) B: fibers spanned by kron(c_i, b_k) in M_{N_C N_B}, index i major.
 * Throws BundleError(NotSubalgebra) if C is not a *-subalgebra.
 */
BundlePtr tensor_bundle(const MatSubspace& c, const FellBundle& b, double tol = kDefaultTol);

/** id_C (x) T between tensor bundles; blocks kron(I, T_g). */
BundleMap tensor_map(
    BundlePtr source_tensor, BundlePtr target_tensor, const MatSubspace& c,
    const BundleMap& t);

/** Transports every net element to C (x) B, keeping bound and epsilon. */
ApproxWitness transport_witness(
    const ApproxWitness& w, const MatSubspace& c, BundlePtr tensor);

struct NuclearityNote {
  int unit_fiber_dim = 0;
  int algebra_dim = 0;
  bool unit_fiber_nuclear = true;
  bool algebra_nuclear = true;
  std::string note;
};

/** Structural data only: every finite-dimensional C*-algebra is nuclear. */
NuclearityNote nuclearity_note(const FellBundle& b);

}  // namespace fellcp
