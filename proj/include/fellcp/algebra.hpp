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
#include <utility>
#include <vector>

#include "fellcp/bundle.hpp"

namespace fellcp {

class AlgebraElement;

/**
 * The reduced cross-sectional algebra C*_r(B) of a finite bundle, realised
 * on C^{|G|} (x) C^N through the regular representation:
 *
 *   lambda_g(a) has the block a at block position (g h, h) for every h,
 *
 * so that E_g(x) is read off block (g, e). For finite groups the full and
 * reduced algebras coincide and this single object stands for both; in
 * particular the weak containment property holds automatically.
 *
 * The tagged basis is {lambda_g(a_{g,k})}, ordered like the bundle's tagged
 * coordinates, hence dim = total_dim of the bundle.
 */
class CrossSectionalAlgebra
    : public std::enable_shared_from_this<CrossSectionalAlgebra> {
 public:
  /** Builds the algebra and verifies its invariants exhaustively. */
  static std::shared_ptr<const CrossSectionalAlgebra> build(
      BundlePtr bundle, double tol = kDefaultTol);

  const FellBundle& bundle() const { return *bundle_; }
  const BundlePtr& bundle_ptr() const { return bundle_; }
  int dim() const { return bundle_->total_dim(); }
  int big_dim() const { return bundle_->group().order() * bundle_->ambient_dim(); }

  /** lambda_g(a) for an arbitrary N x N matrix a. */
  CMatrix lambda(Element g, const CMatrix& a) const;
  const CMatrix& basis(int idx) const { return basis_[idx]; }
  /** (g, k) of a tagged basis index. */
  std::pair<Element, int> tag(int idx) const { return tags_[idx]; }
  const CMatrix& unit_matrix() const { return unit_; }

  CMatrix matrix_of(const CVector& coords) const;
  /** Coordinates of a big matrix if it lies in the algebra. */
  std::optional<CVector> coords_of(const CMatrix& big, double tol = kDefaultTol) const;

  AlgebraElement element(const CVector& coords) const;
  std::optional<AlgebraElement> element_from_matrix(
      const CMatrix& big, double tol = kDefaultTol) const;
  AlgebraElement basis_element(int idx) const;
  AlgebraElement unit() const;

  /** Coordinates of x_i^* x_j for tagged basis elements. */
  CVector coords_of_star_product(int i, int j) const;

 private:
  CrossSectionalAlgebra() = default;

  BundlePtr bundle_;
  std::vector<CMatrix> basis_;
  std::vector<std::pair<Element, int>> tags_;
  CMatrix unit_;
};

using AlgebraPtr = std::shared_ptr<const CrossSectionalAlgebra>;

inline AlgebraPtr build_algebra(BundlePtr bundle, double tol = kDefaultTol) {
  return CrossSectionalAlgebra::build(std::move(bundle), tol);
}

/**
 * An element of a cross-sectional algebra, carrying both its big matrix and
 * its tagged coordinates. Coordinates are authoritative for membership, the
 * matrix for norms and positivity.
 */
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr parent, CVector coords, CMatrix matrix)
      : parent_(std::move(parent)),
        coords_(std::move(coords)),
        matrix_(std::move(matrix)) {}

  const CrossSectionalAlgebra& parent() const { return *parent_; }
  const AlgebraPtr& parent_ptr() const { return parent_; }
  const CVector& coords() const { return coords_; }
  const CMatrix& matrix() const { return matrix_; }

  AlgebraElement adjoint() const;
  AlgebraElement operator*(const AlgebraElement& other) const;
  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator*(Complex s) const;

 private:
  AlgebraPtr parent_;
  CVector coords_;
  CMatrix matrix_;
};

/** E_g(x): block (g, e) of x; lies in A_g. */
CMatrix fourier_coeff(const AlgebraElement& x, Element g);
/** E(x) = E_e(x). */
CMatrix cond_expectation(const AlgebraElement& x);
double algebra_norm(const AlgebraElement& x);

/** Dimension of the center, from the commutation equations on the basis. */
int center_dimension(const CrossSectionalAlgebra& alg, double rel_tol = 1e-9);

}  // namespace fellcp
