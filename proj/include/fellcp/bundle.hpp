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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fellcp/groups.hpp"
#include "fellcp/linalg.hpp"

namespace fellcp {

class BundleError : public Error {
 public:
  enum class Kind {
    BadShape,
    LinearDependence,
    UnitFiberNotSubalgebra,
    GradingViolation,
    AdjointViolation,
    NoUnitInUnitFiber,
    BlockNotInFiber,
    NotSubalgebra,
    BundleMismatch,
    ActionNotAutomorphic,
    AxiomViolation,
  };

  BundleError(Kind kind, std::vector<int> witness, const std::string& what)
      : Error(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  /** GradingViolation: (g, h, i, j) meaning a_{g,i} a_{h,j} is not in
   * A_{gh}; AdjointViolation: (g, i); BlockNotInFiber: (i, j). */
  const std::vector<int>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<int> witness_;
};

std::string to_string(BundleError::Kind kind);

/**
 * A Fell bundle over a finite group, realised concretely: every fiber A_g
 * is a subspace of M_N, products and adjoints are matrix products and
 * adjoints. Obtained only through validate_bundle(), which checks the
 * bundle axioms exhaustively on basis pairs.
 *
 * Coordinates on the whole bundle are "tagged": fiber g occupies the index
 * range [offset(g), offset(g) + dim A_g).
 */
class FellBundle {
 public:
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int ambient_dim() const { return ambient_dim_; }
  const MatSubspace& fiber(Element g) const { return fibers_[g]; }
  int fiber_dim(Element g) const { return fibers_[g].dim(); }
  /** Sum of all fiber dimensions. */
  int total_dim() const { return total_dim_; }
  int offset(Element g) const { return offsets_[g]; }
  /** The unit of the unit fiber (a projection, possibly not the identity). */
  const CMatrix& unit() const { return unit_; }

  CMatrix element(Element g, const CVector& coords) const {
    return fibers_[g].combine(coords);
  }
  /** Coordinates of m in A_g; throws BundleError(BlockNotInFiber). */
  CVector coords(Element g, const CMatrix& m, double tol = kDefaultTol) const;

 private:
  friend std::shared_ptr<const FellBundle> validate_bundle(
      GroupPtr, int, std::vector<std::vector<CMatrix>>, double);

  FellBundle() = default;

  GroupPtr group_;
  int ambient_dim_ = 0;
  std::vector<MatSubspace> fibers_;
  std::vector<int> offsets_;
  int total_dim_ = 0;
  CMatrix unit_;
};

using BundlePtr = std::shared_ptr<const FellBundle>;

/**
 * Checks the concrete Fell bundle axioms and returns the bundle.
 *
 * Order of checks: shapes and linear independence, unit fiber closed under
 * product and adjoint, grading closure A_g A_h in A_gh over all (g,h,i,j) in
 * lexicographic order, adjoint closure A_g^* in A_{g^-1}, existence of a unit
 * of A_e acting as a two-sided unit on every fiber.
 */
BundlePtr validate_bundle(
    GroupPtr group, int ambient_dim,
    std::vector<std::vector<CMatrix>> fiber_bases, double tol = kDefaultTol);

std::vector<int> fiber_dim_vector(const FellBundle& b);

/** (g_1, ..., g_n). */
using GTuple = std::vector<Element>;

/**
 * Assembles R = [r_ij] with r_ij in A_{g_i^-1 g_j} into the nN x nN block
 * matrix. Positivity of R in M_g(B) is equivalent to PSD of the result,
 * since the assembly is a faithful *-homomorphism into M_n(M_N).
 */
CMatrix matrix_algebra_embed(
    const FellBundle& b, const GTuple& tuple,
    const std::vector<std::vector<CMatrix>>& blocks, double tol = kDefaultTol);

/** Same group table, ambient dimension and fiber bases (entrywise). */
bool same_bundle(const FellBundle& a, const FellBundle& b, double tol = 1e-12);

}  // namespace fellcp
