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

// Shared generators for the test suites: a zoo of small bundles, random
// bundle maps with and without forced positivity, and brute-force oracles
// that avoid the library code paths they are compared against.

#pragma once

#include <string>
#include <vector>

#include "fellcp/approx.hpp"
#include "fellcp/constructions.hpp"
#include "fellcp/random.hpp"

namespace fellcp::testing {

struct NamedBundle {
  std::string name;
  BundlePtr bundle;
};

/** Diagonal n x n matrices. */
MatSubspace diagonal(int n);

/** Z_2 grading of M_{a+b} by the block parity of a (a, b) split. */
BundlePtr parity_grading(int a, int b);

/** The Z_2 flip on diagonal 2x2 matrices. */
DynamicalSystem flip_system();

/**
 * Same bundle seen through a random unitary conjugation and a random
 * invertible change of basis in every fiber.
 */
BundlePtr scrambled(const FellBundle& b, Rng& rng);

/** Small bundles, |G| <= 6 and N <= 4, several with scrambled bases. */
std::vector<NamedBundle> bundle_zoo();

/** Random coordinates in every block (generally not even self-adjoint). */
BundleMap random_map(BundlePtr source, BundlePtr target, const GroupHom& hom, Rng& rng);
/** (T + T^*) / 2 of a random map; source and target must agree. */
BundleMap random_selfadjoint_map(BundlePtr bundle, Rng& rng);

/** Exel map of a Gaussian xi. */
BundleMap random_exel_map(BundlePtr bundle, Rng& rng);
/** Scalar multiplier by the pd function of a Gaussian vector. */
BundleMap random_pd_multiplier(BundlePtr bundle, Rng& rng);
/** Gaussian scalar function (usually not positive definite). */
ScalarFunction random_function(int n, Rng& rng);

/** A bundle map together with a generator label and whether pd is forced. */
struct MapCase {
  std::string label;
  BundleMap map;
  bool forced_pd;
};

/**
 * At least `count` maps on the zoo: forced-pd constructions (Exel maps, pd
 * multipliers, compositions with morphisms along non-trivial homs, positive
 * combinations) interleaved with random self-adjoint and random raw maps.
 */
std::vector<MapCase> map_cases(int count, std::uint64_t seed);

/** Random element of A_g (Gaussian coordinates). */
CMatrix random_fiber_element(const FellBundle& b, Element g, Rng& rng);

/**
 * Tuple matrix [T_{g_i^-1 g_j}(a_i^* a_j)] assembled directly into
 * M_n(M_N) block by block, without matrix_algebra_embed.
 */
CMatrix tuple_matrix(const BundleMap& t, const std::vector<Element>& gs,
                     const std::vector<CMatrix>& as);

/** Smallest eigenvalue of the Hermitian part, via the Jacobi routine. */
double min_eig_jacobi(const CMatrix& m);

}  // namespace fellcp::testing
