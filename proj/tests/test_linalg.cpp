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

#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "fellcp/linalg.hpp"
#include "fellcp/random.hpp"

using namespace fellcp;
using Catch::Matchers::WithinAbs;

namespace {

CMatrix circulant(const std::vector<Complex>& row) {
  const int n = static_cast<int>(row.size());
  CMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = row[(j - i + n) % n];
  return c;
}

CMatrix random_hermitian(Rng& rng, int n) {
  const CMatrix z = random_cmatrix(rng, n, n);
  return 0.5 * (z + z.adjoint());
}

}  // namespace

TEST_CASE("psd_check on the basic examples", "[linalg]") {
  const PsdCertificate id = psd_check(CMatrix::Identity(3, 3));
  CHECK(id.verdict == PsdVerdict::Positive);
  CHECK_THAT(id.min_eigenvalue, WithinAbs(1.0, 1e-14));
  CHECK_FALSE(id.witness.has_value());

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -0.5;
  const PsdCertificate neg = psd_check(d);
  REQUIRE(neg.verdict == PsdVerdict::NotPositive);
  REQUIRE(neg.witness.has_value());
  CHECK_THAT(std::abs((*neg.witness)(1)), WithinAbs(1.0, 1e-12));
  CHECK_THAT(std::abs((*neg.witness)(0)), WithinAbs(0.0, 1e-12));
  CHECK(neg.tolerance_used == kDefaultTol);

  CMatrix skew = CMatrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK(psd_check(skew).verdict == PsdVerdict::NotHermitian);
  CHECK_THROWS_AS(psd_check(CMatrix::Zero(2, 3)), LinalgError);
  CHECK(psd_check(CMatrix(0, 0)).positive());
}

TEST_CASE("circulant spectrum matches the closed form", "[linalg]") {
  // eigenvalues of circ(c_0..c_{n-1}) are sum_j c_j w^{jk}
  const double two_thirds = 2.0 / 3.0;
  const CMatrix c = circulant({1.0, -two_thirds, -two_thirds});
  const PsdCertificate cert = psd_check(c);
  CHECK(cert.verdict == PsdVerdict::NotPositive);
  CHECK_THAT(cert.min_eigenvalue, WithinAbs(-1.0 / 3.0, 1e-12));

  Rng rng = keyed_rng(1, 0);
  for (int n = 2; n <= 7; ++n) {
    // hermitian circulant: c_{n-j} = conj(c_j)
    std::vector<Complex> row(n);
    const CVector z = random_cvector(rng, n);
    for (int j = 0; j < n; ++j) row[j] = 0.5 * (z(j) + std::conj(z((n - j) % n)));
    double closed_min = 1e300;
    for (int k = 0; k < n; ++k) {
      Complex lam = 0;
      for (int j = 0; j < n; ++j)
        lam += row[j] * std::polar(1.0, 2 * std::numbers::pi * j * k / n);
      closed_min = std::min(closed_min, lam.real());
    }
    CHECK_THAT(psd_check(circulant(row)).min_eigenvalue, WithinAbs(closed_min, 1e-12));
  }
}

TEST_CASE("op_norm", "[linalg]") {
  CHECK(op_norm(CMatrix::Zero(3, 3)) == 0.0);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -4.0;
  CHECK_THAT(op_norm(d), WithinAbs(4.0, 1e-14));
  CHECK_THAT(op_norm(matrix_unit(2, 0, 1)), WithinAbs(1.0, 1e-14));

  // ||A||^2 is the top eigenvalue of A*A
  Rng rng = keyed_rng(2, 0);
  for (int t = 0; t < 20; ++t) {
    const CMatrix a = random_cmatrix(rng, 4, 3);
    const double top = jacobi_eigen(a.adjoint() * a).values.maxCoeff();
    CHECK_THAT(op_norm(a), WithinAbs(std::sqrt(top), 1e-10 * std::sqrt(top)));
  }
}

TEST_CASE("Eigen backend and Jacobi fallback agree and meet the residual contract", "[linalg]") {
  Rng rng = keyed_rng(3, 0);
  for (int n = 1; n <= 12; ++n) {
    const CMatrix h = random_hermitian(rng, n);
    const EigenSystem a = hermitian_eigen(h);
    const EigenSystem b = jacobi_eigen(h);
    const double scale = std::max(1.0, op_norm(h));
    CHECK(eigen_residual(h, a) <= kEigenResidualBound * scale);
    CHECK(eigen_residual(h, b) <= kEigenResidualBound * scale);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() <= 1e-10 * scale);
    const CMatrix id = CMatrix::Identity(n, n);
    CHECK((b.vectors.adjoint() * b.vectors - id).norm() <= 1e-10);
    for (int k = 1; k < n; ++k) CHECK(b.values(k - 1) <= b.values(k));
  }
}

TEST_CASE("psd verdicts are invariant under unitary conjugation", "[linalg]") {
  Rng rng = keyed_rng(4, 0);
  int positives = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 5;
    // half the trials are PSD by construction
    CMatrix m;
    if (t % 2 == 0) {
      const CMatrix y = random_cmatrix(rng, n - 1, n);
      m = y.adjoint() * y;
    } else {
      m = random_hermitian(rng, n);
    }
    const CMatrix u = random_unitary(rng, n);
    const PsdCertificate a = psd_check(m, 1e-8);
    const PsdCertificate b = psd_check(u.adjoint() * m * u, 1e-8);
    CHECK(a.verdict == b.verdict);
    if (t % 2 == 0) CHECK(a.positive());
    positives += a.positive();
  }
  CHECK(positives >= 50);
}

TEST_CASE("NotPositive witnesses re-evaluate", "[linalg]") {
  Rng rng = keyed_rng(5, 0);
  int seen = 0;
  for (int t = 0; t < 200; ++t) {
    const CMatrix m = random_hermitian(rng, 1 + t % 6);
    const PsdCertificate cert = psd_check(m);
    if (cert.verdict != PsdVerdict::NotPositive) continue;
    ++seen;
    REQUIRE(cert.witness.has_value());
    const CVector& v = *cert.witness;
    const double q = v.dot(m * v).real();
    CHECK(q < -cert.tolerance_used * cert.scale * v.squaredNorm());
  }
  CHECK(seen > 100);
}

TEST_CASE("subspace membership", "[linalg]") {
  const CMatrix id = CMatrix::Identity(2, 2);
  const MatSubspace scalars(2, {id});
  const auto five = subspace_member(scalars, 5.0 * id);
  REQUIRE(five.has_value());
  CHECK_THAT(std::abs((*five)(0) - 5.0), WithinAbs(0.0, 1e-14));
  CHECK_FALSE(subspace_member(scalars, matrix_unit(2, 0, 1)).has_value());

  const MatSubspace s(2, {id, matrix_unit(2, 0, 1)});
  const auto c = subspace_member(s, 2.0 * matrix_unit(2, 0, 1) + 3.0 * id);
  REQUIRE(c.has_value());
  CHECK_THAT(std::abs((*c)(0) - 3.0), WithinAbs(0.0, 1e-14));
  CHECK_THAT(std::abs((*c)(1) - 2.0), WithinAbs(0.0, 1e-14));

  CHECK_THROWS_AS(MatSubspace(2, {id, 2.0 * id}), LinalgError);
  CHECK_THROWS_AS(MatSubspace(2, {CMatrix::Identity(3, 3)}), LinalgError);
  CHECK(MatSubspace::zero(3).dim() == 0);
  CHECK(MatSubspace::full(3).dim() == 9);
}

TEST_CASE("membership round trip on random spans", "[linalg]") {
  Rng rng = keyed_rng(6, 0);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 3;
    const int d = 1 + t % (n * n);
    std::vector<CMatrix> basis;
    for (int k = 0; k < d; ++k) basis.push_back(random_cmatrix(rng, n, n));
    const MatSubspace s(n, basis);
    const CVector c = random_cvector(rng, d);
    const CMatrix m = s.combine(c);
    const auto got = s.member(m);
    REQUIRE(got.has_value());
    CHECK((*got - c).norm() <= 1e-9 * std::max(1.0, c.norm()));
    CHECK((s.combine(*got) - m).norm() <= 1e-9 * std::max(1.0, m.norm()));
    if (d < n * n) {
      // the HS-orthogonal complement is not in the span
      CMatrix off = random_cmatrix(rng, n, n);
      off -= s.combine(s.project(off));
      if (off.norm() > 1e-6) CHECK_FALSE(s.member(m + off).has_value());
    }
  }
}

TEST_CASE("subalgebra test", "[linalg]") {
  CHECK(MatSubspace::full(2).is_subalgebra());
  CHECK(MatSubspace(2, {matrix_unit(2, 0, 0), matrix_unit(2, 1, 1)}).is_subalgebra());
  CHECK_FALSE(MatSubspace(2, {matrix_unit(2, 0, 1)}).is_subalgebra());
}

TEST_CASE("small helpers", "[linalg]") {
  const CMatrix a = matrix_unit(2, 0, 1);
  const CMatrix b = CMatrix::Identity(2, 2);
  CHECK(kron(a, b).rows() == 4);
  CHECK(kron(a, b)(0, 2) == Complex(1.0));
  CHECK(kron(a, b)(1, 3) == Complex(1.0));
  CHECK(hs_inner(a, a) == Complex(1.0));
  CHECK(max_asymmetry(a) == 1.0);
  CMatrix bad = b;
  bad(0, 0) = std::nan("");
  CHECK_FALSE(all_finite(bad));
  CHECK(null_space_dim(CMatrix::Zero(3, 3)) == 3);
}
