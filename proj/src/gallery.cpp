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

#include "fellcp/gallery.hpp"

#include <functional>
#include <utility>

#include "fellcp/constructions.hpp"
#include "fellcp/random.hpp"

namespace fellcp {

namespace {

MatSubspace full_matrices(int n) { return MatSubspace::full(n); }

MatSubspace diagonal(int n) {
  std::vector<CMatrix> basis;
  for (int i = 0; i < n; ++i) basis.push_back(matrix_unit(n, i, i));
  return MatSubspace(n, std::move(basis));
}

GalleryExample base(std::string name, std::string description, std::string command,
                    std::string expected) {
  GalleryExample ex;
  ex.name = std::move(name);
  ex.description = std::move(description);
  ex.command = std::move(command);
  ex.expected = std::move(expected);
  return ex;
}

DynamicalSystem flip_system() {
  return DynamicalSystem::from_function(
      diagonal(2), cyclic_group(2), [](Element g, const CMatrix& a) {
        if (g == 0) return a;
        CMatrix s = a;
        std::swap(s(0, 0), s(1, 1));
        return s;
      });
}

using Builder = std::function<GalleryExample()>;

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> reg = {
      {"group-bundle-Z3-pd",
       [] {
         auto ex = base("group-bundle-Z3-pd",
                        "scalar multiplier (1, 1/2, 1/2) on the group bundle of Z_3",
                        "check-pd", "PositiveDefinite");
         ex.bundle = group_bundle(cyclic_group(3));
         ex.map = scalar_multiplier(ex.bundle, {1.0, 0.5, 0.5});
         return ex;
       }},
      {"group-bundle-Z3-not-pd",
       [] {
         auto ex = base("group-bundle-Z3-not-pd",
                        "scalar multiplier (1, -2/3, -2/3); circulant eigenvalue -1/3",
                        "check-pd", "NotPositiveDefinite");
         ex.bundle = group_bundle(cyclic_group(3));
         ex.map = scalar_multiplier(ex.bundle, {1.0, -2.0 / 3.0, -2.0 / 3.0});
         return ex;
       }},
      {"group-bundle-S3",
       [] {
         auto ex = base("group-bundle-S3", "group algebra of S_3 (dimension 6, non-commutative)",
                        "build-algebra", "Built");
         ex.bundle = group_bundle(symmetric_group(3));
         return ex;
       }},
      {"trivial-bundle-M2",
       [] {
         auto ex = base("trivial-bundle-M2", "M_2 as a bundle over the trivial group",
                        "validate-bundle", "Valid");
         ex.bundle = trivial_bundle(full_matrices(2));
         return ex;
       }},
      {"trivial-bundle-diag2",
       [] {
         auto ex = base("trivial-bundle-diag2", "diagonal 2x2 matrices, commutative",
                        "build-algebra", "Built");
         ex.bundle = trivial_bundle(diagonal(2));
         return ex;
       }},
      {"embedded-M2-in-M3",
       [] {
         auto ex = base("embedded-M2-in-M3", "M_2 in the corner of M_3; unit is not I",
                        "validate-bundle", "Valid");
         std::vector<CMatrix> basis;
         for (int i = 0; i < 2; ++i)
           for (int j = 0; j < 2; ++j) basis.push_back(matrix_unit(3, i, j));
         ex.bundle = trivial_bundle(MatSubspace(3, std::move(basis)));
         return ex;
       }},
      {"transpose-M2",
       [] {
         auto ex = base("transpose-M2", "transpose on M_2: positive but not completely positive",
                        "check-cp", "NotPositive");
         ex.bundle = trivial_bundle(full_matrices(2));
         ex.map = BundleMap::from_function(
             ex.bundle, ex.bundle, GroupHom::identity(ex.bundle->group_ptr()),
             [](Element, const CMatrix& a) { return CMatrix(a.transpose()); });
         return ex;
       }},
      {"clock-Z3-exel",
       [] {
         auto ex = base("clock-Z3-exel", "Exel map of a seeded random xi on the Z_3 grading of M_3",
                        "check-cp", "Positive");
         ex.bundle = clock_grading(3);
         Rng rng = keyed_rng(0, 0);
         std::vector<CVector> xi;
         for (int h = 0; h < 3; ++h) xi.push_back(random_cvector(rng, ex.bundle->fiber_dim(0)));
         ex.map = exel_xi_map(ex.bundle, xi);
         return ex;
       }},
      {"character-twist-Z3",
       [] {
         auto ex = base("character-twist-Z3", "multiplier by the character g -> exp(2 pi i g/3)",
                        "check-morphism", "Morphism");
         ex.bundle = clock_grading(3);
         ex.map = scalar_multiplier(ex.bundle, cyclic_character(3, 1));
         return ex;
       }},
      {"multiplier-not-morphism-Z3",
       [] {
         auto ex = base("multiplier-not-morphism-Z3",
                        "pd multiplier (1, 1/2, 1/2) is not multiplicative",
                        "check-morphism", "NotMorphism");
         ex.bundle = group_bundle(cyclic_group(3));
         ex.map = scalar_multiplier(ex.bundle, {1.0, 0.5, 0.5});
         return ex;
       }},
      {"crossed-product-Z2-flip",
       [] {
         auto ex = base("crossed-product-Z2-flip",
                        "Z_2 flipping the diagonal of M_2; the crossed product is M_2",
                        "build-algebra", "Built");
         ex.bundle = crossed_product_bundle(flip_system());
         return ex;
       }},
      {"crossed-product-family-Z2",
       [] {
         auto ex = base("crossed-product-family-Z2",
                        "family (1, 1/2) times the identity on the flip crossed product",
                        "check-pd", "PositiveDefinite");
         ex.bundle = crossed_product_bundle(flip_system());
         const CMatrix id = CMatrix::Identity(2, 2);
         ex.map = crossed_product_family_map(
             ex.bundle, ex.bundle, GroupHom::identity(ex.bundle->group_ptr()),
             {id, CMatrix(0.5 * id)});
         return ex;
       }},
      {"subgroup-expectation-Z4",
       [] {
         auto ex = base("subgroup-expectation-Z4",
                        "conditional expectation of the Z_4 group bundle onto {0, 2}",
                        "check-pd", "PositiveDefinite");
         ex.bundle = group_bundle(cyclic_group(4));
         std::vector<std::vector<CMatrix>> sub(4);
         std::vector<CMatrix> idem(4);
         for (int g = 0; g < 4; ++g) {
           const bool in_k = g % 2 == 0;
           if (in_k) sub[g].push_back(CMatrix::Ones(1, 1));
           idem[g] = in_k ? CMatrix::Ones(1, 1) : CMatrix::Zero(1, 1);
         }
         ex.map = subbundle_cond_expectation(ex.bundle, sub, idem);
         ex.target = ex.map->target_ptr();
         return ex;
       }},
      {"coefficient-map-Z3",
       [] {
         auto ex = base("coefficient-map-Z3",
                        "pd map extracted from x -> y^* x y on the group algebra of Z_3",
                        "extract-pd", "PositiveDefinite");
         ex.bundle = group_bundle(cyclic_group(3));
         const AlgebraPtr alg = build_algebra(ex.bundle);
         Rng rng = keyed_rng(0, 1);
         const AlgebraElement y = alg->element(random_cvector(rng, alg->dim()));
         CMatrix superop(alg->dim(), alg->dim());
         for (int i = 0; i < alg->dim(); ++i) {
           superop.col(i) = (y.adjoint() * alg->basis_element(i) * y).coords();
         }
         ex.superop = superop;
         ex.hom = GroupHom::identity(ex.bundle->group_ptr());
         return ex;
       }},
      {"auto-witness-clock-Z2",
       [] {
         auto ex = base("auto-witness-clock-Z2",
                        "constant-xi witness on the diagonal/antidiagonal grading of M_2",
                        "check-ap", "Passed");
         ex.bundle = clock_grading(2);
         ex.net = auto_witness(ex.bundle);
         return ex;
       }},
      {"tensor-M2-Z2",
       [] {
         auto ex = base("tensor-M2-Z2", "M_2 tensor the group bundle of Z_2 (dimension 8)",
                        "tensor", "Passed");
         ex.bundle = group_bundle(cyclic_group(2));
         ex.tensor_factor = trivial_bundle(full_matrices(2));
         ex.net = auto_witness(ex.bundle);
         return ex;
       }},
  };
  return reg;
}

}  // namespace

std::vector<std::string> gallery_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

GalleryExample gallery_example(const std::string& name) {
  for (const auto& [n, build] : registry()) {
    if (n == name) return build();
  }
  throw Error("unknown example '" + name + "'");
}

}  // namespace fellcp
