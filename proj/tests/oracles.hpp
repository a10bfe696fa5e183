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

// Independent reference implementations used as test oracles. Written with
// explicit index loops so they share no code paths with the library.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Tr_B or Tr_A of an (a*b) x (a*b) matrix.
inline Mat partial_trace_pair(const Mat& m, int a, int b, bool keep_first) {
  const int k = keep_first ? a : b;
  Mat out = Mat::Zero(k, k);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int i2 = 0; i2 < a; ++i2)
        for (int j2 = 0; j2 < b; ++j2) {
          const C v = m(i * b + j, i2 * b + j2);
          if (keep_first && j == j2) out(i, i2) += v;
          if (!keep_first && i == i2) out(j, j2) += v;
        }
  return out;
}

inline Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      for (int k = 0; k < y.rows(); ++k)
        for (int l = 0; l < y.cols(); ++l) out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
  return out;
}

// Sum_ij C(|i><j|) (x) |i><j| with C given by Kraus operators.
inline Mat choi(const std::vector<Mat>& kraus, int din) {
  const int dout = static_cast<int>(kraus.front().rows());
  Mat out = Mat::Zero(dout * din, dout * din);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j) {
      Mat e = Mat::Zero(din, din);
      e(i, j) = 1.0;
      Mat img = Mat::Zero(dout, dout);
      for (const auto& k : kraus) img += k * e * k.adjoint();
      for (int r = 0; r < dout; ++r)
        for (int s = 0; s < dout; ++s) out(r * din + i, s * din + j) += img(r, s);
    }
  return out;
}

// Output spectrum of a pure input through the depolarising channel with
// parameter lam: one eigenvalue lam + (1 - lam)/d, d - 1 copies of (1 - lam)/d.
inline double depolarized_pure_entropy_bits(double lam, int d) {
  const double big = lam + (1.0 - lam) / d;
  const double small = (1.0 - lam) / d;
  double s = -big * std::log2(big);
  if (small > 0) s -= (d - 1) * small * std::log2(small);
  return s;
}

// rho -> d/(d^2-1) I - rho/(d^2-1) on a pure state has eigenvalue
// (d-1)/(d^2-1) once and d/(d^2-1) with multiplicity d-1.
inline double unot_pure_entropy_bits(int d) {
  const double dd = d;
  const double lo = (dd - 1.0) / (dd * dd - 1.0);
  const double hi = dd / (dd * dd - 1.0);
  return -lo * std::log2(lo) - (dd - 1.0) * hi * std::log2(hi);
}

// Capacity log2 d - (1-p) S0 - p S1 rebuilt from first principles.
inline double capacity_bits(int n, int d) {
  const double dd = d;
  const double lam = (n - 1.0) / (n - 1.0 + dd * dd);
  const double p = (n - 1.0) * (dd * dd - 1.0) / (n * dd * dd);
  return std::log2(dd) - (1.0 - p) * depolarized_pure_entropy_bits(lam, d) - p * unot_pure_entropy_bits(d);
}

}  // namespace oracle
