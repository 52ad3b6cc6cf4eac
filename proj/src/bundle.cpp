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

#include "fellcp/bundle.hpp"

namespace fellcp {

std::string to_string(BundleError::Kind kind) {
  using K = BundleError::Kind;
  switch (kind) {
    case K::BadShape:
      return "BadShape";
    case K::LinearDependence:
      return "LinearDependence";
    case K::UnitFiberNotSubalgebra:
      return "UnitFiberNotSubalgebra";
    case K::GradingViolation:
      return "GradingViolation";
    case K::AdjointViolation:
      return "AdjointViolation";
    case K::NoUnitInUnitFiber:
      return "NoUnitInUnitFiber";
    case K::BlockNotInFiber:
      return "BlockNotInFiber";
    case K::NotSubalgebra:
      return "NotSubalgebra";
    case K::BundleMismatch:
      return "BundleMismatch";
    case K::ActionNotAutomorphic:
      return "ActionNotAutomorphic";
    case K::AxiomViolation:
      return "AxiomViolation";
  }
  return "Unknown";
}

CVector FellBundle::coords(Element g, const CMatrix& m, double tol) const {
  auto c = fibers_[g].member(m, tol);
  if (!c) {
    throw BundleError(
        BundleError::Kind::BlockNotInFiber, {g},
        "matrix does not lie in fiber " + std::to_string(g));
  }
  return *c;
}

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

// Unit of a finite-dimensional *-algebra A_e given by a basis: solve
// u a_j = a_j = a_j u for u in span(basis).
std::optional<CMatrix> unit_of(const MatSubspace& ae, double tol) {
  const int n = ae.ambient_dim();
  const int d = ae.dim();
  if (d == 0) return CMatrix::Zero(n, n);
  const Eigen::Index block = static_cast<Eigen::Index>(n) * n;
  CMatrix lhs(2 * d * block, d);
  CVector rhs(2 * d * block);
  for (int j = 0; j < d; ++j) {
    const CMatrix& aj = ae.basis(j);
    for (int k = 0; k < d; ++k) {
      const CMatrix left = ae.basis(k) * aj;
      const CMatrix right = aj * ae.basis(k);
      lhs.block(2 * j * block, k, block, 1) =
          Eigen::Map<const CVector>(left.data(), block);
      lhs.block((2 * j + 1) * block, k, block, 1) =
          Eigen::Map<const CVector>(right.data(), block);
    }
    rhs.segment(2 * j * block, block) = Eigen::Map<const CVector>(aj.data(), block);
    rhs.segment((2 * j + 1) * block, block) =
        Eigen::Map<const CVector>(aj.data(), block);
  }
  const CVector c = lhs.colPivHouseholderQr().solve(rhs);
  const CMatrix u = ae.combine(c);
  const double scale = std::max(1.0, rhs.norm());
  if ((lhs * c - rhs).norm() > tol * scale) return std::nullopt;
  if ((u - u.adjoint()).norm() > tol * std::max(1.0, u.norm())) return std::nullopt;
  return CMatrix(0.5 * (u + u.adjoint()));
}

}  // namespace

BundlePtr validate_bundle(
    GroupPtr group, int ambient_dim,
    std::vector<std::vector<CMatrix>> fiber_bases, double tol) {
  using K = BundleError::Kind;
  const FiniteGroup& G = *group;
  if (static_cast<int>(fiber_bases.size()) != G.order()) {
    throw BundleError(K::BadShape, {}, "one fiber per group element required");
  }
  if (ambient_dim < 1) throw BundleError(K::BadShape, {}, "ambient dimension < 1");

  auto bundle = std::shared_ptr<FellBundle>(new FellBundle());
  bundle->group_ = group;
  bundle->ambient_dim_ = ambient_dim;
  for (int g = 0; g < G.order(); ++g) {
    for (std::size_t k = 0; k < fiber_bases[g].size(); ++k) {
      const CMatrix& m = fiber_bases[g][k];
      if (m.rows() != ambient_dim || m.cols() != ambient_dim) {
        throw BundleError(
            K::BadShape, {g, static_cast<int>(k)},
            "fiber " + std::to_string(g) + " basis element " +
                std::to_string(k) + " is not N x N");
      }
    }
    try {
      bundle->fibers_.emplace_back(ambient_dim, std::move(fiber_bases[g]));
    } catch (const LinalgError& err) {
      throw BundleError(
          K::LinearDependence, {g},
          "fiber " + std::to_string(g) + ": " + err.what());
    }
    bundle->offsets_.push_back(bundle->total_dim_);
    bundle->total_dim_ += bundle->fibers_.back().dim();
  }

  const Element e = G.identity();
  const MatSubspace& ae = bundle->fibers_[e];
  if (!ae.is_subalgebra(tol)) {
    throw BundleError(
        K::UnitFiberNotSubalgebra, {e},
        "unit fiber is not closed under product and adjoint");
  }

  for (int g = 0; g < G.order(); ++g) {
    const MatSubspace& ag = bundle->fibers_[g];
    for (int h = 0; h < G.order(); ++h) {
      const MatSubspace& ah = bundle->fibers_[h];
      const MatSubspace& agh = bundle->fibers_[G.mul(g, h)];
      for (int i = 0; i < ag.dim(); ++i) {
        for (int j = 0; j < ah.dim(); ++j) {
          if (!agh.member(ag.basis(i) * ah.basis(j), tol)) {
            throw BundleError(
                K::GradingViolation, {g, h, i, j},
                "grading violated at (g,h,i,j)=" + tuple_str({g, h, i, j}));
          }
        }
      }
    }
  }

  for (int g = 0; g < G.order(); ++g) {
    const MatSubspace& ag = bundle->fibers_[g];
    const MatSubspace& ainv = bundle->fibers_[G.inv(g)];
    for (int i = 0; i < ag.dim(); ++i) {
      if (!ainv.member(ag.basis(i).adjoint(), tol)) {
        throw BundleError(
            K::AdjointViolation, {g, i},
            "adjoint of basis element " + std::to_string(i) + " of fiber " +
                std::to_string(g) + " is not in the inverse fiber");
      }
    }
  }

  auto unit = unit_of(ae, tol);
  if (!unit) {
    throw BundleError(K::NoUnitInUnitFiber, {e}, "unit fiber has no unit");
  }
  for (int g = 0; g < G.order(); ++g) {
    const MatSubspace& ag = bundle->fibers_[g];
    for (int i = 0; i < ag.dim(); ++i) {
      const CMatrix& b = ag.basis(i);
      const double s = tol * std::max(1.0, b.norm());
      if ((*unit * b - b).norm() > s || (b * *unit - b).norm() > s) {
        throw BundleError(
            K::NoUnitInUnitFiber, {g, i},
            "unit of A_e does not act as a unit on fiber " + std::to_string(g));
      }
    }
  }
  bundle->unit_ = *unit;
  return bundle;
}

std::vector<int> fiber_dim_vector(const FellBundle& b) {
  std::vector<int> dims;
  for (int g = 0; g < b.group().order(); ++g) dims.push_back(b.fiber_dim(g));
  return dims;
}

CMatrix matrix_algebra_embed(
    const FellBundle& b, const GTuple& tuple,
    const std::vector<std::vector<CMatrix>>& blocks, double tol) {
  const int n = static_cast<int>(tuple.size());
  const int N = b.ambient_dim();
  const FiniteGroup& G = b.group();
  if (static_cast<int>(blocks.size()) != n) {
    throw BundleError(BundleError::Kind::BadShape, {}, "block array has wrong size");
  }
  CMatrix out = CMatrix::Zero(n * N, n * N);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(blocks[i].size()) != n) {
      throw BundleError(BundleError::Kind::BadShape, {i}, "block row has wrong size");
    }
    for (int j = 0; j < n; ++j) {
      const CMatrix& r = blocks[i][j];
      const Element g = G.mul(G.inv(tuple[i]), tuple[j]);
      if (r.rows() != N || r.cols() != N || !b.fiber(g).member(r, tol)) {
        throw BundleError(
            BundleError::Kind::BlockNotInFiber, {i, j},
            "block " + tuple_str({i, j}) + " is not in fiber " +
                std::to_string(g));
      }
      out.block(i * N, j * N, N, N) = r;
    }
  }
  return out;
}

bool same_bundle(const FellBundle& a, const FellBundle& b, double tol) {
  if (&a == &b) return true;
  if (!(a.group() == b.group()) || a.ambient_dim() != b.ambient_dim()) return false;
  for (int g = 0; g < a.group().order(); ++g) {
    if (a.fiber_dim(g) != b.fiber_dim(g)) return false;
    for (int k = 0; k < a.fiber_dim(g); ++k) {
      if ((a.fiber(g).basis(k) - b.fiber(g).basis(k)).norm() > tol) return false;
    }
  }
  return true;
}

}  // namespace fellcp
