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

#include "fellcp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fellcp {

Complex hs_inner(const CMatrix& x, const CMatrix& y) {
  return (x.adjoint() * y).trace();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag()))
      return false;
  }
  return true;
}

double max_asymmetry(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix matrix_unit(int n, int row, int col) {
  CMatrix e = CMatrix::Zero(n, n);
  e(row, col) = 1.0;
  return e;
}

double op_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

// ---------------------------------------------------------------------------

double eigen_residual(const CMatrix& m, const EigenSystem& es) {
  if (es.values.size() == 0) return 0.0;
  const CMatrix r = m * es.vectors - es.vectors * es.values.asDiagonal();
  return r.colwise().norm().maxCoeff();
}

namespace {

EigenSystem sorted(RVector values, CMatrix vectors) {
  std::vector<Eigen::Index> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return values(a) < values(b);
  });
  EigenSystem es{RVector(values.size()), CMatrix(vectors.rows(), vectors.cols())};
  for (std::size_t k = 0; k < order.size(); ++k) {
    es.values(k) = values(order[k]);
    es.vectors.col(k) = vectors.col(order[k]);
  }
  return es;
}

}  // namespace

EigenSystem jacobi_eigen(const CMatrix& m, int max_sweeps) {
  const Eigen::Index n = m.rows();
  CMatrix a = 0.5 * (m + m.adjoint());
  CMatrix v = CMatrix::Identity(n, n);
  const double fro = a.norm();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-16 * std::max(fro, 1e-300)) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex phase = a(p, q) / mag;  // e^{i theta}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double angle = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {  // a <- a J
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // a <- J^* a
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // v <- v J
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }
  return sorted(a.diagonal().real(), v);
}

EigenSystem hermitian_eigen(const CMatrix& m) {
  if (m.rows() != m.cols()) throw LinalgError("eigen: matrix not square");
  if (m.rows() == 0) return {};
  const CMatrix h = 0.5 * (m + m.adjoint());
  auto bound = [](const EigenSystem& es) {
    const double spectral = es.values.cwiseAbs().maxCoeff();
    return kEigenResidualBound * std::max(spectral, 1e-300);
  };

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() == Eigen::Success) {
    EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
    if (eigen_residual(h, es) <= bound(es)) return es;
  }
  EigenSystem es = jacobi_eigen(h);
  if (eigen_residual(h, es) > bound(es)) {
    throw NumericError("eigen-decomposition failed to meet residual bound");
  }
  return es;
}

// ---------------------------------------------------------------------------

std::string to_string(PsdVerdict v) {
  switch (v) {
    case PsdVerdict::Positive:
      return "Positive";
    case PsdVerdict::NotPositive:
      return "NotPositive";
    case PsdVerdict::NotHermitian:
      return "NotHermitian";
  }
  return "Unknown";
}

CVector canonical_phase(const CVector& v) {
  if (v.size() == 0) return v;
  Eigen::Index arg = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // strict > keeps the first maximiser, which keeps the choice stable
    if (std::abs(v(i)) > best * (1.0 + 1e-12)) {
      best = std::abs(v(i));
      arg = i;
    }
  }
  if (best == 0.0) return v;
  return v * (std::abs(v(arg)) / v(arg));
}

PsdCertificate psd_check(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw LinalgError("psd_check: matrix not square");
  if (!all_finite(m)) throw LinalgError("psd_check: non-finite entries");

  PsdCertificate cert;
  cert.tolerance_used = tol;
  if (m.rows() == 0) return cert;

  cert.asymmetry = max_asymmetry(m);
  const EigenSystem es = hermitian_eigen(m);
  const double spectral = std::max(
      std::abs(es.values(0)), std::abs(es.values(es.values.size() - 1)));
  cert.scale = std::max(1.0, spectral);
  cert.min_eigenvalue = es.values(0);

  if (cert.asymmetry > tol * cert.scale) {
    cert.verdict = PsdVerdict::NotHermitian;
  } else if (cert.min_eigenvalue >= -tol * cert.scale) {
    cert.verdict = PsdVerdict::Positive;
  } else {
    cert.verdict = PsdVerdict::NotPositive;
    cert.witness = canonical_phase(es.vectors.col(0));
  }
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

}  // namespace

MatSubspace::MatSubspace(int ambient_dim, std::vector<CMatrix> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (ambient_dim < 1) throw LinalgError("subspace: ambient dimension < 1");
  const int d = dim();
  const Eigen::Index n2 = static_cast<Eigen::Index>(ambient_dim) * ambient_dim;
  CMatrix stacked(n2, d);
  for (int k = 0; k < d; ++k) {
    if (basis_[k].rows() != ambient_dim || basis_[k].cols() != ambient_dim) {
      throw LinalgError(
          "subspace: basis element " + std::to_string(k) + " has wrong shape");
    }
    if (!all_finite(basis_[k])) {
      throw LinalgError(
          "subspace: basis element " + std::to_string(k) + " not finite");
    }
    stacked.col(k) = vec(basis_[k]);
  }
  gram_ = stacked.adjoint() * stacked;
  if (d == 0) return;
  if (d > n2) throw LinalgError("subspace: more basis elements than dimension");

  Eigen::SelfAdjointEigenSolver<CMatrix> gram_eigs(gram_);
  const double lmin = gram_eigs.eigenvalues()(0);
  const double lmax = gram_eigs.eigenvalues()(d - 1);
  if (!(lmax > 0.0) || lmin <= 1e-12 * lmax) {
    throw LinalgError("subspace: basis is linearly dependent");
  }

  Eigen::HouseholderQR<CMatrix> qr(stacked);
  q_ = qr.householderQ() * CMatrix::Identity(n2, d);
  r_ = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
}

MatSubspace MatSubspace::zero(int ambient_dim) {
  return MatSubspace(ambient_dim, {});
}

MatSubspace MatSubspace::full(int ambient_dim) {
  std::vector<CMatrix> units;
  for (int i = 0; i < ambient_dim; ++i)
    for (int j = 0; j < ambient_dim; ++j)
      units.push_back(matrix_unit(ambient_dim, i, j));
  return MatSubspace(ambient_dim, std::move(units));
}

CVector MatSubspace::project(const CMatrix& m) const {
  if (m.rows() != ambient_dim_ || m.cols() != ambient_dim_) {
    throw LinalgError("subspace: matrix has wrong shape");
  }
  if (empty()) return CVector(0);
  const CVector rhs = q_.adjoint() * vec(m);
  return r_.triangularView<Eigen::Upper>().solve(rhs);
}

CMatrix MatSubspace::combine(const CVector& coords) const {
  CMatrix out = CMatrix::Zero(ambient_dim_, ambient_dim_);
  for (int k = 0; k < dim(); ++k) {
    if (coords(k) != Complex(0.0)) out += coords(k) * basis_[k];
  }
  return out;
}

std::optional<CVector> MatSubspace::member(const CMatrix& m, double tol) const {
  CVector c = project(m);
  const double err = (m - combine(c)).norm();
  if (err <= tol * std::max(1.0, m.norm())) return c;
  return std::nullopt;
}

bool MatSubspace::is_subalgebra(double tol) const {
  for (int i = 0; i < dim(); ++i) {
    if (!member(basis_[i].adjoint(), tol)) return false;
    for (int j = 0; j < dim(); ++j) {
      if (!member(basis_[i] * basis_[j], tol)) return false;
    }
  }
  return true;
}

std::optional<CVector> subspace_member(
    const MatSubspace& s, const CMatrix& m, double tol) {
  return s.member(m, tol);
}

int null_space_dim(const CMatrix& m, double rel_tol) {
  if (m.cols() == 0) return 0;
  if (m.rows() == 0) return static_cast<int>(m.cols());
  Eigen::BDCSVD<CMatrix> svd(m);
  const RVector& s = svd.singularValues();
  const double top = s(0);
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > rel_tol * std::max(top, 1e-300)) ++rank;
  }
  return static_cast<int>(m.cols()) - rank;
}

}  // namespace fellcp
