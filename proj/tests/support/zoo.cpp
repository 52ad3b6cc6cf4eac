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

#include "zoo.hpp"

#include <cmath>

namespace fellcp::testing {

MatSubspace diagonal(int n) {
  std::vector<CMatrix> basis;
  for (int i = 0; i < n; ++i) basis.push_back(matrix_unit(n, i, i));
  return MatSubspace(n, std::move(basis));
}

BundlePtr parity_grading(int a, int b) {
  const int n = a + b;
  std::vector<std::vector<CMatrix>> fibers(2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool same = (i < a) == (j < a);
      fibers[same ? 0 : 1].push_back(matrix_unit(n, i, j));
    }
  }
  return validate_bundle(cyclic_group(2), n, std::move(fibers));
}

DynamicalSystem flip_system() {
  return DynamicalSystem::from_function(
      diagonal(2), cyclic_group(2), [](Element g, const CMatrix& a) {
        CMatrix s = a;
        if (g == 1) std::swap(s(0, 0), s(1, 1));
        return s;
      });
}

BundlePtr scrambled(const FellBundle& b, Rng& rng) {
  const CMatrix u = random_unitary(rng, b.ambient_dim());
  std::vector<std::vector<CMatrix>> fibers(b.group().order());
  for (int g = 0; g < b.group().order(); ++g) {
    const int d = b.fiber_dim(g);
    const CMatrix mix = random_cmatrix(rng, d, d) + 2.0 * CMatrix::Identity(d, d);
    for (int k = 0; k < d; ++k) {
      fibers[g].push_back(u * b.element(g, mix.col(k)) * u.adjoint());
    }
  }
  return validate_bundle(b.group_ptr(), b.ambient_dim(), std::move(fibers));
}

std::vector<NamedBundle> bundle_zoo() {
  std::vector<NamedBundle> zoo;
  for (int n = 2; n <= 6; ++n) {
    zoo.push_back({"group Z" + std::to_string(n), group_bundle(cyclic_group(n))});
  }
  zoo.push_back({"group S3", group_bundle(symmetric_group(3))});
  zoo.push_back({"clock 2", clock_grading(2)});
  zoo.push_back({"clock 3", clock_grading(3)});
  zoo.push_back({"clock 4", clock_grading(4)});
  zoo.push_back({"trivial M2", trivial_bundle(MatSubspace::full(2))});
  zoo.push_back({"trivial diag2", trivial_bundle(diagonal(2))});
  {
    std::vector<CMatrix> corner;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) corner.push_back(matrix_unit(3, i, j));
    zoo.push_back({"M2 in M3", trivial_bundle(MatSubspace(3, std::move(corner)))});
  }
  zoo.push_back({"parity 1+2", parity_grading(1, 2)});
  zoo.push_back({"parity 2+2", parity_grading(2, 2)});
  zoo.push_back({"crossed flip", crossed_product_bundle(flip_system())});
  zoo.push_back(
      {"M2 x group Z2", tensor_bundle(MatSubspace::full(2), *group_bundle(cyclic_group(2)))});
  {
    std::vector<std::vector<CMatrix>> fibers(4);
    fibers[0].push_back(CMatrix::Ones(1, 1));
    fibers[2].push_back(CMatrix::Ones(1, 1));
    zoo.push_back({"Z4 on {0,2}", validate_bundle(cyclic_group(4), 1, std::move(fibers))});
  }
  Rng rng = keyed_rng(77, 0);
  zoo.push_back({"scrambled clock 3", scrambled(*clock_grading(3), rng)});
  zoo.push_back({"scrambled parity 1+2", scrambled(*parity_grading(1, 2), rng)});
  zoo.push_back({"scrambled crossed flip", scrambled(*crossed_product_bundle(flip_system()), rng)});
  zoo.push_back({"scrambled M2", scrambled(*trivial_bundle(MatSubspace::full(2)), rng)});
  return zoo;
}

BundleMap random_map(BundlePtr source, BundlePtr target, const GroupHom& hom, Rng& rng) {
  std::vector<CMatrix> blocks;
  for (int g = 0; g < source->group().order(); ++g) {
    blocks.push_back(random_cmatrix(rng, target->fiber_dim(hom(g)), source->fiber_dim(g)));
  }
  return BundleMap(std::move(source), std::move(target), hom, std::move(blocks));
}

BundleMap random_selfadjoint_map(BundlePtr bundle, Rng& rng) {
  const BundleMap t =
      random_map(bundle, bundle, GroupHom::identity(bundle->group_ptr()), rng);
  return (t + adjoint_map(t)) * Complex(0.5);
}

BundleMap random_exel_map(BundlePtr bundle, Rng& rng) {
  const int d = bundle->fiber_dim(bundle->group().identity());
  std::vector<CVector> xi;
  for (int h = 0; h < bundle->group().order(); ++h) xi.push_back(random_cvector(rng, d));
  return exel_xi_map(std::move(bundle), xi);
}

BundleMap random_pd_multiplier(BundlePtr bundle, Rng& rng) {
  const CVector xi = random_cvector(rng, bundle->group().order());
  return scalar_multiplier(bundle, pd_function_from_vector(bundle->group(), xi, true));
}

ScalarFunction random_function(int n, Rng& rng) {
  const CVector v = random_cvector(rng, n);
  return ScalarFunction(v.data(), v.data() + n);
}

namespace {

/** A morphism along a non-trivial hom, with its source and target. */
struct HomCase {
  std::string label;
  BundleMap morphism;
};

std::vector<HomCase> hom_cases() {
  std::vector<HomCase> out;
  auto quotient = [](GroupPtr g, GroupPtr h, std::vector<Element> image) {
    BundlePtr a = group_bundle(g);
    BundlePtr b = group_bundle(h);
    GroupHom phi = GroupHom::validate(image, g, h);
    std::vector<CMatrix> blocks(g->order(), CMatrix::Ones(1, 1));
    return BundleMap(a, b, phi, blocks);
  };
  out.push_back({"Z4->Z2", quotient(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1})});
  out.push_back({"Z6->Z3", quotient(cyclic_group(6), cyclic_group(3), {0, 1, 2, 0, 1, 2})});
  out.push_back({"S3->Z2", quotient(symmetric_group(3), cyclic_group(2), {0, 1, 1, 0, 0, 1})});
  out.push_back({"Z3->1", quotient(cyclic_group(3), trivial_group(), {0, 0, 0})});
  {
    BundlePtr a = clock_grading(2);
    BundlePtr b = clock_grading(4);
    GroupHom phi = GroupHom::validate({0, 2}, a->group_ptr(), b->group_ptr());
    const CMatrix id2 = CMatrix::Identity(2, 2);
    out.push_back({"clock2->clock4",
                   BundleMap::from_function(a, b, phi, [&](Element, const CMatrix& x) {
                     return kron(x, id2);
                   })});
  }
  return out;
}

}  // namespace

std::vector<MapCase> map_cases(int count, std::uint64_t seed) {
  const auto zoo = bundle_zoo();
  const auto homs = hom_cases();
  std::vector<MapCase> cases;
  for (int i = 0; cases.size() < static_cast<std::size_t>(count); ++i) {
    Rng rng = keyed_rng(seed, static_cast<std::uint64_t>(i));
    const NamedBundle& nb = zoo[i % zoo.size()];
    const BundlePtr& b = nb.bundle;
    const GroupHom id = GroupHom::identity(b->group_ptr());
    switch (i % 8) {
      case 0:
        cases.push_back({"exel on " + nb.name, random_exel_map(b, rng), true});
        break;
      case 1:
        cases.push_back({"self-adjoint random on " + nb.name, random_selfadjoint_map(b, rng), false});
        break;
      case 2:
        cases.push_back({"pd multiplier on " + nb.name, random_pd_multiplier(b, rng), true});
        break;
      case 3:
        cases.push_back({"raw random on " + nb.name, random_map(b, b, id, rng), false});
        break;
      case 4: {
        const HomCase& hc = homs[(i / 8) % homs.size()];
        const BundleMap inner = random_exel_map(hc.morphism.source_ptr(), rng);
        cases.push_back({"morphism after exel, " + hc.label, compose_maps(hc.morphism, inner), true});
        break;
      }
      case 5: {
        const HomCase& hc = homs[(i / 8) % homs.size()];
        const BundlePtr& src = hc.morphism.source_ptr();
        const BundleMap inner = scalar_multiplier(
            src, pd_function_from_vector(src->group(), random_cvector(rng, src->group().order())));
        // self-adjoint but indefinite perturbation of a pd map
        const BundleMap noise = random_selfadjoint_map(src, rng) * Complex(0.7);
        cases.push_back(
            {"morphism after perturbed multiplier, " + hc.label,
             compose_maps(hc.morphism, inner + noise), false});
        break;
      }
      case 6: {
        std::uniform_real_distribution<double> coef(0.0, 2.0);
        const BundleMap t = random_exel_map(b, rng) * Complex(coef(rng)) +
                            random_pd_multiplier(b, rng) * Complex(coef(rng));
        cases.push_back({"positive combination on " + nb.name, t, true});
        break;
      }
      case 7: {
        const ScalarFunction f = random_function(b->group().order(), rng);
        ScalarFunction sym(f.size());
        for (int g = 0; g < b->group().order(); ++g) {
          sym[g] = 0.5 * (f[g] + std::conj(f[b->group().inv(g)]));
        }
        cases.push_back({"hermitian multiplier on " + nb.name, scalar_multiplier(b, sym), false});
        break;
      }
    }
  }
  return cases;
}

CMatrix random_fiber_element(const FellBundle& b, Element g, Rng& rng) {
  if (b.fiber_dim(g) == 0) return CMatrix::Zero(b.ambient_dim(), b.ambient_dim());
  return b.element(g, random_cvector(rng, b.fiber_dim(g)));
}

CMatrix tuple_matrix(const BundleMap& t, const std::vector<Element>& gs,
                     const std::vector<CMatrix>& as) {
  const FiniteGroup& G = t.source().group();
  const int n = static_cast<int>(gs.size());
  const int nb = t.target().ambient_dim();
  CMatrix m = CMatrix::Zero(n * nb, n * nb);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Element g = G.mul(G.inv(gs[i]), gs[j]);
      if (t.source().fiber_dim(g) == 0) continue;
      m.block(i * nb, j * nb, nb, nb) = t.apply(g, as[i].adjoint() * as[j]);
    }
  }
  return m;
}

double min_eig_jacobi(const CMatrix& m) {
  const CMatrix h = 0.5 * (m + m.adjoint());
  return jacobi_eigen(h).values.minCoeff();
}

}  // namespace fellcp::testing
