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

#include "fellcp/algebra.hpp"

#include <cmath>

namespace fellcp {

std::shared_ptr<const CrossSectionalAlgebra> CrossSectionalAlgebra::build(
    BundlePtr bundle, double tol) {
  auto alg = std::shared_ptr<CrossSectionalAlgebra>(new CrossSectionalAlgebra());
  alg->bundle_ = bundle;
  const FellBundle& B = *bundle;
  const FiniteGroup& G = B.group();

  for (int g = 0; g < G.order(); ++g) {
    for (int k = 0; k < B.fiber_dim(g); ++k) {
      alg->basis_.push_back(alg->lambda(g, B.fiber(g).basis(k)));
      alg->tags_.emplace_back(g, k);
    }
  }
  alg->unit_ = alg->lambda(G.identity(), B.unit());

  const int D = alg->dim();
  const Eigen::Index big2 =
      static_cast<Eigen::Index>(alg->big_dim()) * alg->big_dim();
  if (D > 0) {
    CMatrix stacked(big2, D);
    for (int i = 0; i < D; ++i) {
      stacked.col(i) = Eigen::Map<const CVector>(alg->basis_[i].data(), big2);
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> gram(stacked.adjoint() * stacked);
    if (gram.eigenvalues()(0) <= 1e-12 * gram.eigenvalues()(D - 1)) {
      throw BundleError(
          BundleError::Kind::LinearDependence, {},
          "regular representation images are linearly dependent");
    }
  }

  for (int i = 0; i < D; ++i) {
    const auto [g, k] = alg->tags_[i];
    const CMatrix& a = B.fiber(g).basis(k);
    const CMatrix& xi = alg->basis_[i];
    const double s = tol * std::max(1.0, xi.norm());
    if ((xi.adjoint() - alg->lambda(G.inv(g), a.adjoint())).norm() > s) {
      throw BundleError(
          BundleError::Kind::AxiomViolation, {i},
          "lambda is not *-preserving on basis element " + std::to_string(i));
    }
    for (int j = 0; j < D; ++j) {
      const auto [h, l] = alg->tags_[j];
      const CMatrix& b = B.fiber(h).basis(l);
      const CMatrix prod = xi * alg->basis_[j];
      const CMatrix expect = alg->lambda(G.mul(g, h), a * b);
      if ((prod - expect).norm() > tol * std::max(1.0, prod.norm())) {
        throw BundleError(
            BundleError::Kind::AxiomViolation, {i, j},
            "lambda is not multiplicative on basis pair (" + std::to_string(i) +
                "," + std::to_string(j) + ")");
      }
    }
  }
  return alg;
}

CMatrix CrossSectionalAlgebra::lambda(Element g, const CMatrix& a) const {
  const FiniteGroup& G = bundle_->group();
  const int N = bundle_->ambient_dim();
  CMatrix out = CMatrix::Zero(big_dim(), big_dim());
  for (int h = 0; h < G.order(); ++h) {
    out.block(G.mul(g, h) * N, h * N, N, N) = a;
  }
  return out;
}

CMatrix CrossSectionalAlgebra::matrix_of(const CVector& coords) const {
  const FellBundle& B = *bundle_;
  const FiniteGroup& G = B.group();
  const int N = B.ambient_dim();
  CMatrix out = CMatrix::Zero(big_dim(), big_dim());
  for (int g = 0; g < G.order(); ++g) {
    if (B.fiber_dim(g) == 0) continue;
    const CMatrix a = B.element(g, coords.segment(B.offset(g), B.fiber_dim(g)));
    for (int h = 0; h < G.order(); ++h) {
      out.block(G.mul(g, h) * N, h * N, N, N) += a;
    }
  }
  return out;
}

std::optional<CVector> CrossSectionalAlgebra::coords_of(
    const CMatrix& big, double tol) const {
  if (big.rows() != big_dim() || big.cols() != big_dim()) return std::nullopt;
  const FellBundle& B = *bundle_;
  const FiniteGroup& G = B.group();
  const int N = B.ambient_dim();
  const Element e = G.identity();
  CVector coords(dim());
  for (int g = 0; g < G.order(); ++g) {
    const CMatrix block = big.block(g * N, e * N, N, N);
    if (B.fiber_dim(g) == 0) continue;
    coords.segment(B.offset(g), B.fiber_dim(g)) = B.fiber(g).project(block);
  }
  if ((big - matrix_of(coords)).norm() > tol * std::max(1.0, big.norm())) {
    return std::nullopt;
  }
  return coords;
}

AlgebraElement CrossSectionalAlgebra::element(const CVector& coords) const {
  return AlgebraElement(shared_from_this(), coords, matrix_of(coords));
}

std::optional<AlgebraElement> CrossSectionalAlgebra::element_from_matrix(
    const CMatrix& big, double tol) const {
  auto c = coords_of(big, tol);
  if (!c) return std::nullopt;
  return AlgebraElement(shared_from_this(), *c, big);
}

AlgebraElement CrossSectionalAlgebra::basis_element(int idx) const {
  CVector c = CVector::Zero(dim());
  c(idx) = 1.0;
  return AlgebraElement(shared_from_this(), c, basis_[idx]);
}

AlgebraElement CrossSectionalAlgebra::unit() const {
  const FellBundle& B = *bundle_;
  const Element e = B.group().identity();
  CVector c = CVector::Zero(dim());
  if (B.fiber_dim(e) > 0) {
    c.segment(B.offset(e), B.fiber_dim(e)) = B.fiber(e).project(B.unit());
  }
  return AlgebraElement(shared_from_this(), c, unit_);
}

CVector CrossSectionalAlgebra::coords_of_star_product(int i, int j) const {
  const FellBundle& B = *bundle_;
  const FiniteGroup& G = B.group();
  const auto [g, k] = tags_[i];
  const auto [h, l] = tags_[j];
  const Element target = G.mul(G.inv(g), h);
  CVector c = CVector::Zero(dim());
  const CMatrix prod = B.fiber(g).basis(k).adjoint() * B.fiber(h).basis(l);
  c.segment(B.offset(target), B.fiber_dim(target)) = B.coords(target, prod);
  return c;
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::adjoint() const {
  const CMatrix m = matrix_.adjoint();
  auto c = parent_->coords_of(m);
  if (!c) throw NumericError("adjoint left the algebra");
  return AlgebraElement(parent_, *c, m);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
  const CMatrix m = matrix_ * other.matrix_;
  auto c = parent_->coords_of(m);
  if (!c) throw NumericError("product left the algebra");
  return AlgebraElement(parent_, *c, m);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  return AlgebraElement(parent_, coords_ + other.coords_, matrix_ + other.matrix_);
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  return AlgebraElement(parent_, coords_ - other.coords_, matrix_ - other.matrix_);
}

AlgebraElement AlgebraElement::operator*(Complex s) const {
  return AlgebraElement(parent_, coords_ * s, matrix_ * s);
}

CMatrix fourier_coeff(const AlgebraElement& x, Element g) {
  const FellBundle& B = x.parent().bundle();
  const int N = B.ambient_dim();
  return x.matrix().block(g * N, B.group().identity() * N, N, N);
}

CMatrix cond_expectation(const AlgebraElement& x) {
  return fourier_coeff(x, x.parent().bundle().group().identity());
}

double algebra_norm(const AlgebraElement& x) { return op_norm(x.matrix()); }

int center_dimension(const CrossSectionalAlgebra& alg, double rel_tol) {
  const int D = alg.dim();
  if (D == 0) return 0;
  // column k: the coordinates of [x_k, x_j], stacked over j
  CMatrix system(static_cast<Eigen::Index>(D) * D, D);
  for (int k = 0; k < D; ++k) {
    for (int j = 0; j < D; ++j) {
      const CMatrix comm = alg.basis(k) * alg.basis(j) - alg.basis(j) * alg.basis(k);
      auto c = alg.coords_of(comm);
      if (!c) throw NumericError("commutator left the algebra");
      system.block(static_cast<Eigen::Index>(j) * D, k, D, 1) = *c;
    }
  }
  return null_space_dim(system, rel_tol);
}

}  // namespace fellcp
