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
#include <vector>

#include "fellcp/bundle.hpp"
#include "fellcp/maps.hpp"

namespace fellcp {

/** A complex function on a finite group, indexed by element. */
using ScalarFunction = std::vector<Complex>;

/** Fibers span{1} in M_1 over every g. */
BundlePtr group_bundle(GroupPtr group);

/** A single-fiber bundle over the trivial group; throws NotSubalgebra. */
BundlePtr trivial_bundle(const MatSubspace& algebra, double tol = kDefaultTol);

/**
 * The Z_n grading of M_n: A_k = span{E_ij : i - j = k mod n}. For n = 2 this
 * is the diagonal / antidiagonal grading.
 */
BundlePtr clock_grading(int n);

/** T_g(b) = phi(g) b, over id_G. */
BundleMap scalar_multiplier(BundlePtr bundle, const ScalarFunction& phi);

/** [phi(g_i^-1 g_j)] over all of G in element order. */
CMatrix scalar_pd_matrix(const FiniteGroup& group, const ScalarFunction& phi);

/**
 * phi(g) = <xi, lambda_g xi> = sum_h conj(xi(h)) xi(g^-1 h). Always positive
 * definite. With normalize, divided by ||xi||^2 so that phi(e) = 1.
 */
ScalarFunction pd_function_from_vector(
    const FiniteGroup& group, const CVector& xi, bool normalize = false);

/** g -> exp(2 pi i k g / n) on Z_n (elements as residues). */
ScalarFunction cyclic_character(int n, int k);

/**
 * T_g(b) = sum_h xi(gh)^* b xi(h), with xi(h) given by its coordinates in the
 * unit fiber (one vector per group element).
 */
BundleMap exel_xi_map(BundlePtr bundle, const std::vector<CVector>& xi_coords);

/** A group acting on a C*-subalgebra of M_N by *-automorphisms. */
class DynamicalSystem {
 public:
  /**
   * action[g] is the coordinate matrix of alpha_g in the basis of `algebra`.
   * Throws BundleError(NotSubalgebra) for a bad algebra and
   * BundleError(ActionNotAutomorphic) if some alpha_g is not a
   * *-automorphism or g -> alpha_g is not a homomorphism.
   */
  static DynamicalSystem validate(
      MatSubspace algebra, GroupPtr group, std::vector<CMatrix> action,
      double tol = kDefaultTol);

  /** Builds the coordinate matrices from a function on matrices. */
  static DynamicalSystem from_function(
      MatSubspace algebra, GroupPtr group,
      const std::function<CMatrix(Element, const CMatrix&)>& alpha,
      double tol = kDefaultTol);

  /** The trivial action. */
  static DynamicalSystem trivial(MatSubspace algebra, GroupPtr group);

  const MatSubspace& algebra() const { return algebra_; }
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const CMatrix& action(Element g) const { return action_[g]; }
  CMatrix act(Element g, const CMatrix& a) const;

 private:
  DynamicalSystem() = default;

  MatSubspace algebra_;
  GroupPtr group_;
  std::vector<CMatrix> action_;
};

/**
 * Semidirect product bundle (a, g)(a', g') = (a alpha_g(a'), gg'), realised
 * in M_{|G| N}: fiber g = {pi(a) V_g}, pi(a) = blockdiag_h(alpha_{h^-1}(a)),
 * V_g = (left shift by g) (x) I_N. Fiber coordinates are those of a.
 */
BundlePtr crossed_product_bundle(const DynamicalSystem& system);

/**
 * The bundle map pi(a) V_g -> pi(family_g(a)) V_phi(g) between two crossed
 * product bundles; family[g] is a dim B x dim A coordinate matrix.
 */
BundleMap crossed_product_family_map(
    BundlePtr source, BundlePtr target, GroupHom hom, std::vector<CMatrix> family);

struct DynamicalSampling {
  int samples = 200;
  std::uint64_t seed = 0;
};

/**
 * Samples tuples (g_1..g_n), n <= |G|, and random a_i in A, and tests
 * [beta_phi(g_i)(family_{g_i^-1 g_j}(alpha_{g_i^-1}(a_i^* a_j)))] >= 0 in
 * M_n(B). Returns the worst certificate seen (a NotHermitian one wins).
 */
PsdCertificate dynamical_pd_matrix_check(
    const DynamicalSystem& source, const DynamicalSystem& target,
    const GroupHom& hom, const std::vector<CMatrix>& family,
    const DynamicalSampling& sampling = {}, double tol = kDefaultTol);

/**
 * The conditional expectation of a bundle onto a sub-bundle.
 *
 * sub_bases[g] spans B_g inside A_g; idempotents[g] is E_g in the
 * coordinates of A_g. Checks idempotence onto B_g, E_g(a)^* =
 * E_{g^-1}(a^*), E_gh(ab) = E_g(a) b and E_hg(ba) = b E_g(a) on basis
 * pairs, and positivity of E_e on `positivity_samples` random a^*a.
 * Returns the map A -> B over id_G. Throws BundleError(AxiomViolation).
 */
BundleMap subbundle_cond_expectation(
    BundlePtr bundle, std::vector<std::vector<CMatrix>> sub_bases,
    const std::vector<CMatrix>& idempotents, double tol = kDefaultTol,
    int positivity_samples = 50, std::uint64_t seed = 0);

}  // namespace fellcp
