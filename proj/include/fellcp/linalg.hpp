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

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fellcp/error.hpp"

namespace fellcp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/** Default relative tolerance for positivity and membership tests. */
inline constexpr double kDefaultTol = 1e-9;
/** Residual bound every eigen backend must meet, relative to ||M||. */
inline constexpr double kEigenResidualBound = 1e-10;

class LinalgError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// elementary helpers

/** Hilbert-Schmidt inner product trace(x^* y), conjugate-linear in x. */
Complex hs_inner(const CMatrix& x, const CMatrix& y);
CMatrix kron(const CMatrix& a, const CMatrix& b);
bool all_finite(const CMatrix& m);
/** max_{ij} |m_ij - conj(m_ji)|. */
double max_asymmetry(const CMatrix& m);
CMatrix matrix_unit(int n, int row, int col);

/** Largest singular value. */
double op_norm(const CMatrix& m);

// ---------------------------------------------------------------------------
// Hermitian eigen-decomposition

struct EigenSystem {
  RVector values;    // ascending
  CMatrix vectors;   // columns, orthonormal
};

/**
 * Eigen-decomposition of a Hermitian matrix (only the Hermitian part is
 * used). Runs the Eigen backend first; if its residual exceeds
 * kEigenResidualBound * ||m|| the cyclic Jacobi routine is used instead.
 * Throws NumericError if neither meets the bound.
 */
EigenSystem hermitian_eigen(const CMatrix& m);

/** Built-in cyclic Jacobi eigen-solver for complex Hermitian matrices. */
EigenSystem jacobi_eigen(const CMatrix& m, int max_sweeps = 100);

/** max_k ||m v_k - lambda_k v_k||. */
double eigen_residual(const CMatrix& m, const EigenSystem& es);

// ---------------------------------------------------------------------------
// PSD certification

enum class PsdVerdict { Positive, NotPositive, NotHermitian };

std::string to_string(PsdVerdict v);

/**
 * Outcome of psd_check.
 *
 * scale = max(1, ||(M+M^*)/2||). Positive iff the asymmetry is at most
 * tol*scale and min_eigenvalue >= -tol*scale. For NotPositive, `witness`
 * is a unit vector with Re<v, M v> = min_eigenvalue < -tol*scale.
 */
struct PsdCertificate {
  PsdVerdict verdict = PsdVerdict::Positive;
  double min_eigenvalue = 0.0;
  std::optional<CVector> witness;
  double tolerance_used = kDefaultTol;
  double scale = 1.0;
  double asymmetry = 0.0;

  bool positive() const { return verdict == PsdVerdict::Positive; }
};

PsdCertificate psd_check(const CMatrix& m, double tol = kDefaultTol);

/** Multiplies v by a phase so that its largest entry is real positive. */
CVector canonical_phase(const CVector& v);

// ---------------------------------------------------------------------------
// subspaces of N x N matrices

/**
 * A linear subspace of M_N given by a fixed, linearly independent basis.
 *
 * Coordinates are taken with respect to that basis. The Hilbert-Schmidt
 * Gram matrix is cached; solves go through a QR factorisation of the
 * vectorised basis.
 */
class MatSubspace {
 public:
  MatSubspace() = default;
  /** Throws LinalgError if the basis is dependent or has wrong shapes. */
  MatSubspace(int ambient_dim, std::vector<CMatrix> basis);

  static MatSubspace zero(int ambient_dim);
  /** All of M_N, basis of matrix units E_ij in row-major order. */
  static MatSubspace full(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool empty() const { return basis_.empty(); }
  const std::vector<CMatrix>& basis() const { return basis_; }
  const CMatrix& basis(int k) const { return basis_[k]; }
  const CMatrix& gram() const { return gram_; }

  /** Least-squares coordinates of m (coordinates of its HS projection). */
  CVector project(const CMatrix& m) const;
  CMatrix combine(const CVector& coords) const;
  /** Coordinates if ||m - combine(c)||_HS <= tol * max(1, ||m||_HS). */
  std::optional<CVector> member(const CMatrix& m, double tol = kDefaultTol) const;

  /** Closed under products and adjoints (checked on all basis pairs). */
  bool is_subalgebra(double tol = kDefaultTol) const;

 private:
  int ambient_dim_ = 0;
  std::vector<CMatrix> basis_;
  CMatrix gram_;
  CMatrix q_;  // orthonormal columns spanning vec(basis)
  CMatrix r_;  // vec(basis) = q_ * r_
};

std::optional<CVector> subspace_member(
    const MatSubspace& s, const CMatrix& m, double tol = kDefaultTol);

/** Dimension of the null space of a linear map given as a matrix. */
int null_space_dim(const CMatrix& m, double rel_tol = 1e-9);

}  // namespace fellcp
