// Copyright 2026 The cswitch Authors
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

// Seeded sampling of Haar-random states, unitaries and channels.

#include <cstdint>
#include <random>

#include "cswitch/matrix_core.hpp"

namespace cswitch {

using Rng = std::mt19937_64;

inline Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

// Uniform double in [0, 1) from the top 53 bits; identical across standard libraries.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = complex_gaussian(rng);
  }
  return g;
}

/// Haar-random unit vector: normalized vector of i.i.d. complex Gaussians.
inline CVector haar_state(int d, Rng& rng) {
  CVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

/// Haar-random isometry of shape rows x cols (rows >= cols), via QR with
/// the phase of R's diagonal absorbed into Q.
inline CMatrix haar_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  if (rows < cols) throw std::invalid_argument("haar_isometry: rows must be >= cols");
  const CMatrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
  const CMatrix r = qr.matrixQR().topLeftCorner(cols, cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

inline CMatrix haar_unitary(int d, Rng& rng) {
  return haar_isometry(d, d, rng);
}

// Random full-rank density matrix (Hilbert-Schmidt measure).
inline CMatrix random_density_matrix(int d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

inline CMatrix random_hermitian(int d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace cswitch
