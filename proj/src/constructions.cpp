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

#include "fellcp/constructions.hpp"

#include <cmath>
#include <numbers>

#include "fellcp/random.hpp"

namespace fellcp {

using K = BundleError::Kind;

BundlePtr group_bundle(GroupPtr group) {
  const int n = group->order();
  std::vector<std::vector<CMatrix>> fibers(n, {CMatrix::Ones(1, 1)});
  return validate_bundle(std::move(group), 1, std::move(fibers));
}

BundlePtr trivial_bundle(const MatSubspace& algebra, double tol) {
  if (!algebra.is_subalgebra(tol)) {
    throw BundleError(K::NotSubalgebra, {}, "not closed under product and adjoint");
  }
  return validate_bundle(trivial_group(), algebra.ambient_dim(), {algebra.basis()}, tol);
}

BundlePtr clock_grading(int n) {
  std::vector<std::vector<CMatrix>> fibers(n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) fibers[k].push_back(matrix_unit(n, i, ((i - k) % n + n) % n));
  }
  return validate_bundle(cyclic_group(n), n, std::move(fibers));
}

BundleMap scalar_multiplier(BundlePtr bundle, const ScalarFunction& phi) {
  const int n = bundle->group().order();
  if (static_cast<int>(phi.size()) != n) {
    throw Error("scalar function needs one value per group element");
  }
  std::vector<CMatrix> blocks;
  for (int g = 0; g < n; ++g) {
    const int d = bundle->fiber_dim(g);
    blocks.push_back(phi[g] * CMatrix::Identity(d, d));
  }
  GroupHom id = GroupHom::identity(bundle->group_ptr());
  return BundleMap(bundle, bundle, std::move(id), std::move(blocks));
}

CMatrix scalar_pd_matrix(const FiniteGroup& group, const ScalarFunction& phi) {
  const int n = group.order();
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = phi[group.mul(group.inv(i), j)];
  }
  return m;
}

ScalarFunction pd_function_from_vector(
    const FiniteGroup& group, const CVector& xi, bool normalize) {
  const int n = group.order();
  if (xi.size() != n) throw Error("xi needs one entry per group element");
  ScalarFunction phi(n, Complex(0.0));
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      phi[g] += std::conj(xi(h)) * xi(group.mul(group.inv(g), h));
    }
  }
  if (normalize) {
    const double nrm2 = xi.squaredNorm();
    if (nrm2 == 0.0) throw Error("cannot normalize the zero vector");
    for (auto& v : phi) v /= nrm2;
  }
  return phi;
}

ScalarFunction cyclic_character(int n, int k) {
  ScalarFunction chi(n);
  for (int g = 0; g < n; ++g) {
    chi[g] = std::polar(1.0, 2.0 * std::numbers::pi * k * g / n);
  }
  return chi;
}

BundleMap exel_xi_map(BundlePtr bundle, const std::vector<CVector>& xi_coords) {
  const FiniteGroup& G = bundle->group();
  const Element e = G.identity();
  if (static_cast<int>(xi_coords.size()) != G.order()) {
    throw Error("xi needs one value per group element");
  }
  std::vector<CMatrix> xi;
  for (const CVector& c : xi_coords) {
    if (c.size() != bundle->fiber_dim(e)) throw Error("xi coordinates have the wrong size");
    xi.push_back(bundle->element(e, c));
  }
  GroupHom id = GroupHom::identity(bundle->group_ptr());
  return BundleMap::from_function(
      bundle, bundle, std::move(id), [&](Element g, const CMatrix& b) {
        CMatrix sum = CMatrix::Zero(b.rows(), b.cols());
        for (int h = 0; h < G.order(); ++h) sum += xi[G.mul(g, h)].adjoint() * b * xi[h];
        return sum;
      });
}

// ---------------------------------------------------------------------------

DynamicalSystem DynamicalSystem::validate(
    MatSubspace algebra, GroupPtr group, std::vector<CMatrix> action, double tol) {
  if (!algebra.is_subalgebra(tol)) {
    throw BundleError(K::NotSubalgebra, {}, "acted-on space is not a *-subalgebra");
  }
  const FiniteGroup& G = *group;
  const int d = algebra.dim();
  if (static_cast<int>(action.size()) != G.order()) {
    throw BundleError(K::ActionNotAutomorphic, {}, "one automorphism per element required");
  }
  auto fail = [](std::vector<int> w, const std::string& what) {
    throw BundleError(K::ActionNotAutomorphic, std::move(w), what);
  };
  for (int g = 0; g < G.order(); ++g) {
    if (action[g].rows() != d || action[g].cols() != d) fail({g}, "action matrix shape");
  }

  DynamicalSystem s;
  s.algebra_ = std::move(algebra);
  s.group_ = std::move(group);
  s.action_ = std::move(action);
  const MatSubspace& A = s.algebra_;

  for (int g = 0; g < G.order(); ++g) {
    if (null_space_dim(s.action_[g]) != 0) fail({g}, "alpha_" + std::to_string(g) + " is not bijective");
    for (int k = 0; k < d; ++k) {
      const CMatrix ak = s.act(g, A.basis(k));
      if ((s.act(g, A.basis(k).adjoint()) - ak.adjoint()).norm() >
          tol * std::max(1.0, ak.norm())) {
        fail({g, k}, "alpha_" + std::to_string(g) + " does not preserve adjoints");
      }
      for (int l = 0; l < d; ++l) {
        const CMatrix lhs = s.act(g, A.basis(k) * A.basis(l));
        const CMatrix rhs = ak * s.act(g, A.basis(l));
        if ((lhs - rhs).norm() > tol * std::max(1.0, rhs.norm())) {
          fail({g, k, l}, "alpha_" + std::to_string(g) + " is not multiplicative");
        }
      }
    }
  }
  const double scale = tol * std::max(1.0, static_cast<double>(d));
  if ((s.action_[G.identity()] - CMatrix::Identity(d, d)).norm() > scale) {
    fail({G.identity()}, "alpha_e is not the identity");
  }
  for (int g = 0; g < G.order(); ++g) {
    for (int h = 0; h < G.order(); ++h) {
      if ((s.action_[G.mul(g, h)] - s.action_[g] * s.action_[h]).norm() >
          scale * std::max(1.0, s.action_[G.mul(g, h)].norm())) {
        fail({g, h}, "alpha is not a homomorphism");
      }
    }
  }
  return s;
}

DynamicalSystem DynamicalSystem::from_function(
    MatSubspace algebra, GroupPtr group,
    const std::function<CMatrix(Element, const CMatrix&)>& alpha, double tol) {
  std::vector<CMatrix> action;
  for (int g = 0; g < group->order(); ++g) {
    CMatrix m(algebra.dim(), algebra.dim());
    for (int k = 0; k < algebra.dim(); ++k) {
      auto c = algebra.member(alpha(g, algebra.basis(k)), tol);
      if (!c) {
        throw BundleError(K::ActionNotAutomorphic, {g, k}, "alpha leaves the algebra");
      }
      m.col(k) = *c;
    }
    action.push_back(std::move(m));
  }
  return validate(std::move(algebra), std::move(group), std::move(action), tol);
}

DynamicalSystem DynamicalSystem::trivial(MatSubspace algebra, GroupPtr group) {
  const int d = algebra.dim();
  std::vector<CMatrix> action(group->order(), CMatrix::Identity(d, d));
  return validate(std::move(algebra), std::move(group), std::move(action));
}

CMatrix DynamicalSystem::act(Element g, const CMatrix& a) const {
  return algebra_.combine(action_[g] * algebra_.project(a));
}

BundlePtr crossed_product_bundle(const DynamicalSystem& system) {
  const FiniteGroup& G = system.group();
  const MatSubspace& A = system.algebra();
  const int N = A.ambient_dim();
  const int n = G.order();
  std::vector<std::vector<CMatrix>> fibers(n);
  for (int g = 0; g < n; ++g) {
    for (int k = 0; k < A.dim(); ++k) {
      // pi(a) V_g has block alpha_{(gh)^-1}(a) at (gh, h)
      CMatrix m = CMatrix::Zero(n * N, n * N);
      for (int h = 0; h < n; ++h) {
        const Element gh = G.mul(g, h);
        m.block(gh * N, h * N, N, N) = system.act(G.inv(gh), A.basis(k));
      }
      fibers[g].push_back(std::move(m));
    }
  }
  return validate_bundle(system.group_ptr(), n * N, std::move(fibers));
}

BundleMap crossed_product_family_map(
    BundlePtr source, BundlePtr target, GroupHom hom, std::vector<CMatrix> family) {
  return BundleMap(std::move(source), std::move(target), std::move(hom), std::move(family));
}

PsdCertificate dynamical_pd_matrix_check(
    const DynamicalSystem& source, const DynamicalSystem& target,
    const GroupHom& hom, const std::vector<CMatrix>& family,
    const DynamicalSampling& sampling, double tol) {
  const FiniteGroup& G = source.group();
  const MatSubspace& A = source.algebra();
  const MatSubspace& B = target.algebra();
  const int NB = B.ambient_dim();
  if (static_cast<int>(family.size()) != G.order()) {
    throw Error("family needs one map per group element");
  }
  for (const CMatrix& f : family) {
    if (f.rows() != B.dim() || f.cols() != A.dim()) throw Error("family map has wrong shape");
  }

  std::optional<PsdCertificate> worst;
  auto worse = [](const PsdCertificate& a, const PsdCertificate& b) {
    const bool ah = a.verdict == PsdVerdict::NotHermitian;
    const bool bh = b.verdict == PsdVerdict::NotHermitian;
    if (ah != bh) return ah;
    return a.min_eigenvalue < b.min_eigenvalue;
  };

  for (int s = 0; s < sampling.samples; ++s) {
    Rng rng = keyed_rng(sampling.seed, static_cast<std::uint64_t>(s));
    std::uniform_int_distribution<int> len(1, G.order());
    std::uniform_int_distribution<int> pick(0, G.order() - 1);
    const int n = len(rng);
    std::vector<Element> gs(n);
    std::vector<CMatrix> as(n);
    for (int i = 0; i < n; ++i) {
      gs[i] = pick(rng);
      as[i] = A.combine(random_cvector(rng, A.dim()));
    }
    CMatrix m(n * NB, n * NB);
    for (int i = 0; i < n; ++i) {
      const Element gi_inv = G.inv(gs[i]);
      for (int j = 0; j < n; ++j) {
        const CMatrix x = source.act(gi_inv, as[i].adjoint() * as[j]);
        const CMatrix y = B.combine(family[G.mul(gi_inv, gs[j])] * A.project(x));
        m.block(i * NB, j * NB, NB, NB) = target.act(hom(gs[i]), y);
      }
    }
    PsdCertificate cert = psd_check(m, tol);
    if (!worst || worse(cert, *worst)) worst = std::move(cert);
  }
  if (!worst) return PsdCertificate{};
  return *worst;
}

// ---------------------------------------------------------------------------

BundleMap subbundle_cond_expectation(
    BundlePtr bundle, std::vector<std::vector<CMatrix>> sub_bases,
    const std::vector<CMatrix>& idempotents, double tol, int positivity_samples,
    std::uint64_t seed) {
  const FellBundle& A = *bundle;
  const FiniteGroup& G = A.group();
  auto fail = [](std::vector<int> w, const std::string& what) {
    throw BundleError(K::AxiomViolation, std::move(w), what);
  };
  if (static_cast<int>(idempotents.size()) != G.order()) {
    fail({}, "one idempotent per group element required");
  }
  for (int g = 0; g < G.order(); ++g) {
    if (static_cast<int>(sub_bases[g].size()) > A.fiber_dim(g)) fail({g}, "sub-fiber too large");
    for (std::size_t k = 0; k < sub_bases[g].size(); ++k) {
      if (!A.fiber(g).member(sub_bases[g][k], tol)) {
        fail({g, static_cast<int>(k)}, "sub-fiber " + std::to_string(g) + " is not inside A_g");
      }
    }
    const CMatrix& e = idempotents[g];
    if (e.rows() != A.fiber_dim(g) || e.cols() != A.fiber_dim(g)) fail({g}, "idempotent shape");
  }
  BundlePtr sub = validate_bundle(A.group_ptr(), A.ambient_dim(),
                                  std::move(sub_bases), tol);
  const FellBundle& B = *sub;

  auto E = [&](Element g, const CMatrix& a) {
    return A.element(g, idempotents[g] * A.coords(g, a, tol));
  };
  auto close = [&](const CMatrix& x, const CMatrix& y) {
    return (x - y).norm() <= tol * std::max(1.0, y.norm());
  };

  for (int g = 0; g < G.order(); ++g) {
    const CMatrix& e = idempotents[g];
    if ((e * e - e).norm() > tol * std::max(1.0, e.norm())) fail({g}, "E_g is not idempotent");
    for (int k = 0; k < A.fiber_dim(g); ++k) {
      if (!B.fiber(g).member(E(g, A.fiber(g).basis(k)), tol)) {
        fail({g, k}, "E_g does not map into B_g");
      }
    }
    for (int k = 0; k < B.fiber_dim(g); ++k) {
      if (!close(E(g, B.fiber(g).basis(k)), B.fiber(g).basis(k))) {
        fail({g, k}, "E_g is not the identity on B_g");
      }
    }
  }
  for (int g = 0; g < G.order(); ++g) {
    for (int k = 0; k < A.fiber_dim(g); ++k) {
      const CMatrix& a = A.fiber(g).basis(k);
      if (!close(E(g, a).adjoint(), E(G.inv(g), a.adjoint()))) {
        fail({g, k}, "E_g(a)^* != E_{g^-1}(a^*)");
      }
      for (int h = 0; h < G.order(); ++h) {
        for (int l = 0; l < B.fiber_dim(h); ++l) {
          const CMatrix& b = B.fiber(h).basis(l);
          if (!close(E(G.mul(g, h), a * b), E(g, a) * b)) {
            fail({g, k, h, l}, "E_gh(ab) != E_g(a) b");
          }
          if (!close(E(G.mul(h, g), b * a), b * E(g, a))) {
            fail({g, k, h, l}, "E_hg(ba) != b E_g(a)");
          }
        }
      }
    }
  }
  const Element e = G.identity();
  for (int s = 0; s < positivity_samples && A.fiber_dim(e) > 0; ++s) {
    Rng rng = keyed_rng(seed, static_cast<std::uint64_t>(s));
    const CMatrix a = A.element(e, random_cvector(rng, A.fiber_dim(e)));
    if (!psd_check(E(e, a.adjoint() * a), tol).positive()) {
      fail({s}, "E_e is not positive on a sampled a^*a");
    }
  }

  GroupHom id = GroupHom::identity(A.group_ptr());
  return BundleMap::from_function(
      bundle, sub, std::move(id), [&](Element g, const CMatrix& a) { return E(g, a); },
      tol);
}

}  // namespace fellcp
