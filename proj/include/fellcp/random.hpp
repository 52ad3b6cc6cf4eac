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

#include <cstdint>
#include <random>

#include "fellcp/linalg.hpp"

namespace fellcp {

using Rng = std::mt19937_64;

/** Generator keyed by (seed, stream); streams are independent of call order. */
inline Rng keyed_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

/** Standard complex Gaussian entries (E|z|^2 = 1). */
inline CMatrix random_cmatrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

inline CVector random_cvector(Rng& rng, Eigen::Index n) {
  return random_cmatrix(rng, n, 1).col(0);
}

/** Haar-distributed unitary via QR with phase correction. */
inline CMatrix random_unitary(Rng& rng, Eigen::Index n) {
  const CMatrix z = random_cmatrix(rng, n, n);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace fellcp
