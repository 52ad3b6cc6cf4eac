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
#include <functional>
#include <optional>
#include <vector>

#include "fellcp/algebra.hpp"
#include "fellcp/bundle.hpp"

namespace fellcp {

/**
 * A bundle map T = (T_g) along a homomorphism phi: G -> H, with
 * T_g : A_g -> B_phi(g) linear. block(g) is the coordinate matrix of T_g,
 * of size dim B_phi(g) x dim A_g, in the fixed fiber bases.
 */
class BundleMap {
 public:
  BundleMap(BundlePtr source, BundlePtr target, GroupHom hom, std::vector<CMatrix> blocks);

  using FiberFunction = std::function<CMatrix(Element, const CMatrix&)>;
  /** Tabulates f on every fiber basis element; each value must lie in
   * B_phi(g) (throws BundleError(BlockNotInFiber) otherwise). */
  static BundleMap from_function(
      BundlePtr source, BundlePtr target, GroupHom hom, const FiberFunction& f,
      double tol = kDefaultTol);
  static BundleMap zero(BundlePtr source, BundlePtr target, GroupHom hom);
  /** Fiberwise identity on a bundle, over id_G. */
  static BundleMap identity(BundlePtr bundle);

  const FellBundle& source() const { return *source_; }
  const FellBundle& target() const { return *target_; }
  const BundlePtr& source_ptr() const { return source_; }
  const BundlePtr& target_ptr() const { return target_; }
  const GroupHom& hom() const { return hom_; }
  const CMatrix& block(Element g) const { return blocks_[g]; }
  const std::vector<CMatrix>& blocks() const { return blocks_; }

  /** T_g(a) for a matrix a in A_g. */
  CMatrix apply(Element g, const CMatrix& a) const;
  /** T_g applied to the k-th basis element of A_g. */
  CMatrix apply_basis(Element g, int k) const;
  /** {g : T_g != 0}. */
  std::vector<Element> support(double tol = 0.0) const;

  BundleMap operator+(const BundleMap& other) const;
  BundleMap operator*(Complex s) const;

 private:
  BundlePtr source_;
  BundlePtr target_;
  GroupHom hom_;
  std::vector<CMatrix> blocks_;
};

/** T*_g(a) = T_{g^-1}(a^*)^*. */
BundleMap adjoint_map(const BundleMap& t);

/** max over g, basis k of ||S_g(a_k) - T_g(a_k)||_op. Maps must share
 * source, target and hom. */
double max_map_distance(const BundleMap& s, const BundleMap& t);

struct MorphismReport {
  bool multiplicative = true;
  bool self_adjoint = true;
  double max_defect = 0.0;
  /** First failing multiplicative pair (g, h, k, l), or for self-adjointness
   * (g, k) of the first failing basis element. */
  std::vector<int> witness;

  bool is_morphism() const { return multiplicative && self_adjoint; }
};

/** Self-adjoint and multiplicative on all basis pairs, within tol. */
MorphismReport is_morphism(const BundleMap& t, double tol = kDefaultTol);

enum class PdVerdict { PositiveDefinite, NotPositiveDefinite };
std::string to_string(PdVerdict v);

struct PdWitness {
  GTuple tuple;                               // phi-images of the master tuple
  std::vector<std::pair<Element, int>> index;  // (g, k) per tuple slot
  CVector vector;                             // negative direction
};

struct PdReport {
  PdVerdict verdict = PdVerdict::NotPositiveDefinite;
  PsdCertificate master_certificate;
  int oracle_trials = 0;
  double oracle_min = 0.0;
  std::optional<PdWitness> witness;

  bool positive_definite() const { return verdict == PdVerdict::PositiveDefinite; }
};

/**
 * The master Gram matrix of T.
 *
 * Index set I = {(g, k)}: every basis element a_{g,k} of every fiber, in
 * tagged order. Block ((g,k),(h,l)) is T_{g^-1 h}(a_{g,k}^* a_{h,l}), an
 * element of B_{phi(g)^-1 phi(h)}; the blocks are assembled with
 * matrix_algebra_embed over the tuple phi(g_I).
 *
 * Why one matrix suffices: for any tuple (g_1..g_n) and a_i in A_{g_i},
 * write a_i = sum_k c_ik a_{g_i,k}. Then [T(a_i^* a_j)] = C^* S C with
 * C = c (x) I_N the scalar block matrix placing c_ik at ((g_i,k), i). PSD is
 * stable under congruence, so S >= 0 implies every tuple matrix is >= 0;
 * conversely S is itself the tuple matrix of the master tuple (with
 * repetitions). pd_oracle samples tuples independently to cross-check.
 */
CMatrix master_matrix(const BundleMap& t, double tol = kDefaultTol);

/** PSD test of the master matrix; no oracle trials are run. */
PdReport pd_check_master(const BundleMap& t, double tol = kDefaultTol);

struct OracleOptions {
  int trials = 1000;
  int max_n = 4;
  std::uint64_t seed = 0;
};

/**
 * Random search for a violation of positive definiteness.
 *
 * Each trial draws a tuple of length 1..max_n (repetitions allowed), unit-HS
 * Gaussian elements a_i in A_{g_i} and b_i in B_{phi(g_i)}, and evaluates the
 * smallest eigenvalue of the Hermitian part of
 * sum_ij b_i T_{g_i^-1 g_j}(a_i^* a_j) b_j^*. Trial t uses a generator keyed
 * by (seed, t). Returns the minimum over all trials.
 */
double pd_oracle(const BundleMap& t, int trials, int max_n, std::uint64_t seed);

/** Master check plus oracle; the report carries both. */
PdReport pd_check(
    const BundleMap& t, double tol = kDefaultTol,
    const OracleOptions& oracle = {});

/**
 * A linear map between two cross-sectional algebras in tagged coordinates:
 * superop is dim(target) x dim(source).
 */
class AlgebraMap {
 public:
  AlgebraMap(AlgebraPtr source, AlgebraPtr target, CMatrix superop);

  const CrossSectionalAlgebra& source() const { return *source_; }
  const CrossSectionalAlgebra& target() const { return *target_; }
  const AlgebraPtr& source_ptr() const { return source_; }
  const AlgebraPtr& target_ptr() const { return target_; }
  const CMatrix& superop() const { return superop_; }

  AlgebraElement apply(const AlgebraElement& x) const;
  CVector apply_coords(const CVector& coords) const { return superop_ * coords; }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  CMatrix superop_;
};

/** M_T, determined by M_T(lambda_g(a)) = lambda_phi(g)(T_g(a)). */
AlgebraMap induce(const BundleMap& t, AlgebraPtr source, AlgebraPtr target);

/**
 * Complete positivity test. With {x_i} the tagged basis of the source
 * algebra, M is CP iff the block matrix [M(x_i^* x_j)] is positive in
 * M_d(target); the same congruence argument as for master_matrix reduces
 * all tuples to this one.
 */
PsdCertificate cp_check(const AlgebraMap& m, double tol = kDefaultTol);

/** The block matrix [M(x_i^* x_j)] used by cp_check. */
CMatrix cp_block_matrix(const AlgebraMap& m);

/**
 * Multiplicativity and *-preservation of an algebra map on all pairs of
 * tagged basis elements; witness (i, j) or (i) as in is_morphism.
 */
MorphismReport is_star_homomorphism(const AlgebraMap& m, double tol = kDefaultTol);

/** T_g = E_phi(g) o M o lambda_g restricted to A_g. */
BundleMap extract_pd_from_cp(const AlgebraMap& m, const GroupHom& hom);

/** (S o T)_g = S_phi(g) o T_g; throws BundleError(BundleMismatch). */
BundleMap compose_maps(const BundleMap& s, const BundleMap& t);

struct FiberNorm {
  double lower_bound = 0.0;  // attained by an explicit element
  bool converged = false;
};

/**
 * Lower bound for ||T_g|| with respect to the operator norms on A_g and
 * B_phi(g), by alternating ascent: from a, take the top singular pair (u, v)
 * of T_g(a), pull the functional u^* T_g(.) v back to A_g, move to the polar
 * part of its representative projected onto A_g. Restarted from `restarts`
 * random points, plus the unit of A_e when g = e.
 */
FiberNorm fiber_map_norm(
    const BundleMap& t, Element g, std::uint64_t seed = 0, int restarts = 8);

struct NormData {
  double norm_Te = 0.0;
  /** true when norm_Te = ||T_e(p)|| is exact (T positive definite). */
  bool norm_Te_exact = false;
  double sup_norm_Tg = 0.0;
  bool sup_converged = false;
  /** ||M_T(1)||; only meaningful when T is positive definite. */
  double norm_MT_on_unit = 0.0;
};

NormData norm_data(const BundleMap& t, double tol = kDefaultTol, std::uint64_t seed = 0);

}  // namespace fellcp
