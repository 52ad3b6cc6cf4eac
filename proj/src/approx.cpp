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

#include "fellcp/approx.hpp"

#include <cmath>

#include "fellcp/constructions.hpp"

namespace fellcp {

double identity_deviation(const BundleMap& t) {
  const FellBundle& B = t.source();
  double worst = 0.0;
  for (int g = 0; g < B.group().order(); ++g) {
    for (int k = 0; k < B.fiber_dim(g); ++k) {
      worst = std::max(worst, op_norm(t.apply_basis(g, k) - B.fiber(g).basis(k)));
    }
  }
  return worst;
}

WitnessReport check_witness(const ApproxWitness& w, double tol) {
  WitnessReport r;
  r.bound = w.bound;
  r.epsilon = w.epsilon;
  if (w.net.empty()) {
    r.message = "empty net";
    return r;
  }
  r.positive_definite = true;
  for (std::size_t i = 0; i < w.net.size(); ++i) {
    const BundleMap& t = w.net[i];
    if (!same_bundle(t.source(), *w.bundle) || !same_bundle(t.target(), *w.bundle) ||
        t.hom().image() != GroupHom::identity(w.bundle->group_ptr()).image()) {
      throw BundleError(
          BundleError::Kind::BundleMismatch, {static_cast<int>(i)},
          "net element " + std::to_string(i) + " is not a map B -> B over id_G");
    }
    const bool pd = pd_check_master(t, tol).positive_definite();
    r.element_pd.push_back(pd);
    r.supports.push_back(t.support(tol));
    r.positive_definite = r.positive_definite && pd;
    const Element e = t.source().group().identity();
    // exact for pd maps; a lower bound otherwise, and then clause (i) fails anyway
    const double norm_te = pd ? (t.source().fiber_dim(e) == 0
                                     ? 0.0
                                     : op_norm(t.apply(e, t.source().unit())))
                              : fiber_map_norm(t, e).lower_bound;
    r.sup_norm_Te = std::max(r.sup_norm_Te, norm_te);
  }
  r.bounded = r.sup_norm_Te <= w.bound;
  r.deviation = identity_deviation(w.net.back());
  r.converges = r.deviation <= w.epsilon;
  if (!r.positive_definite) {
    r.message = "some net element is not positive definite";
  } else if (!r.bounded) {
    r.message = "unit-fiber norms exceed the bound";
  } else if (!r.converges) {
    r.message = "terminal element is not within epsilon of the identity";
  } else {
    r.message = "ok";
  }
  return r;
}

ApproxWitness auto_witness(BundlePtr bundle, double epsilon) {
  const FellBundle& B = *bundle;
  const Element e = B.group().identity();
  const int n = B.group().order();
  CVector unit_coords = CVector::Zero(B.fiber_dim(e));
  if (B.fiber_dim(e) > 0) unit_coords = B.fiber(e).project(B.unit());
  std::vector<CVector> xi(n, unit_coords / std::sqrt(static_cast<double>(n)));
  BundleMap t = exel_xi_map(bundle, xi);
  const double norm_te = B.fiber_dim(e) == 0 ? 0.0 : op_norm(t.apply(e, B.unit()));
  ApproxWitness w{bundle, {std::move(t)}, 1.0 + norm_te, epsilon};
  return w;
}

BundlePtr tensor_bundle(const MatSubspace& c, const FellBundle& b, double tol) {
  if (!c.is_subalgebra(tol)) {
    throw BundleError(BundleError::Kind::NotSubalgebra, {}, "C is not a *-subalgebra");
  }
  std::vector<std::vector<CMatrix>> fibers(b.group().order());
  for (int g = 0; g < b.group().order(); ++g) {
    for (int i = 0; i < c.dim(); ++i) {
      for (int k = 0; k < b.fiber_dim(g); ++k) {
        fibers[g].push_back(kron(c.basis(i), b.fiber(g).basis(k)));
      }
    }
  }
  return validate_bundle(
      b.group_ptr(), c.ambient_dim() * b.ambient_dim(), std::move(fibers), tol);
}

BundleMap tensor_map(
    BundlePtr source_tensor, BundlePtr target_tensor, const MatSubspace& c,
    const BundleMap& t) {
  const CMatrix id = CMatrix::Identity(c.dim(), c.dim());
  std::vector<CMatrix> blocks;
  for (const CMatrix& block : t.blocks()) blocks.push_back(kron(id, block));
  return BundleMap(
      std::move(source_tensor), std::move(target_tensor), t.hom(), std::move(blocks));
}

ApproxWitness transport_witness(
    const ApproxWitness& w, const MatSubspace& c, BundlePtr tensor) {
  ApproxWitness out{tensor, {}, w.bound, w.epsilon};
  for (const BundleMap& t : w.net) out.net.push_back(tensor_map(tensor, tensor, c, t));
  return out;
}

NuclearityNote nuclearity_note(const FellBundle& b) {
  NuclearityNote n;
  n.unit_fiber_dim = b.fiber_dim(b.group().identity());
  n.algebra_dim = b.total_dim();
  n.note =
      "finite-dimensional => nuclear; the criterion 'C*(B) nuclear iff B_e "
      "nuclear' holds vacuously at this scale";
  return n;
}

}  // namespace fellcp
