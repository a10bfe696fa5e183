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

// Dense complex linear algebra over labelled tensor factorizations.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cswitch/errors.hpp"
#include "cswitch/tolerances.hpp"

namespace cswitch {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Ordered subsystem dimensions of a tensor-product space.
class DimVector {
 public:
  DimVector() = default;
  DimVector(std::initializer_list<int> dims) : DimVector(std::vector<int>(dims)) {}
  explicit DimVector(std::vector<int> dims) : dims_(std::move(dims)) {
    for (int d : dims_) {
      if (d < 1) throw std::invalid_argument("subsystem dimension must be >= 1");
    }
  }

  std::size_t size() const noexcept { return dims_.size(); }
  int operator[](std::size_t i) const { return dims_.at(i); }
  const std::vector<int>& values() const noexcept { return dims_; }

  // Product of all subsystem dimensions.
  Eigen::Index total() const noexcept {
    return std::accumulate(dims_.begin(), dims_.end(), Eigen::Index{1},
                           [](Eigen::Index a, int b) { return a * b; });
  }

  DimVector concat(const DimVector& other) const {
    std::vector<int> out = dims_;
    out.insert(out.end(), other.dims_.begin(), other.dims_.end());
    return DimVector(std::move(out));
  }

  bool operator==(const DimVector&) const = default;

 private:
  std::vector<int> dims_;
};

inline bool all_finite(const CMatrix& m) {
  return m.allFinite();
}

// Max entrywise deviation |m - m^dag|.
inline double hermiticity_error(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Kronecker product; indices of `a` vary slowest.
inline CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline CVector tensor(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

namespace detail {

inline void require_square_with_dims(const CMatrix& m, const DimVector& dims) {
  if (m.rows() != m.cols() || m.rows() != dims.total()) {
    throw DimensionMismatch("matrix of shape " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) +
                            " does not match subsystem dimension product " +
                            std::to_string(dims.total()));
  }
}

// Mixed-radix digits of a flat index, most significant subsystem first.
inline void split_index(Eigen::Index flat, const DimVector& dims, std::vector<int>& digits) {
  digits.resize(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
}

}  // namespace detail

/// Trace out every subsystem not listed in `keep`. Kept subsystems retain
/// their relative order.
inline CMatrix partial_trace(const CMatrix& m, const DimVector& dims, std::span<const int> keep) {
  detail::require_square_with_dims(m, dims);
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= dims.size()) {
      throw std::out_of_range("partial_trace: subsystem index out of range");
    }
    kept[static_cast<std::size_t>(k)] = true;
  }
  std::vector<int> kept_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (kept[k]) kept_dims.push_back(dims[k]);
  }
  const DimVector out_dims(kept_dims);
  CMatrix out = CMatrix::Zero(out_dims.total(), out_dims.total());

  std::vector<int> rd, cd;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    detail::split_index(r, dims, rd);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      detail::split_index(c, dims, cd);
      bool diagonal_in_traced = true;
      Eigen::Index ro = 0, co = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (kept[k]) {
          ro = ro * dims[k] + rd[k];
          co = co * dims[k] + cd[k];
        } else if (rd[k] != cd[k]) {
          diagonal_in_traced = false;
          break;
        }
      }
      if (diagonal_in_traced) out(ro, co) += m(r, c);
    }
  }
  return out;
}

inline CMatrix partial_trace(const CMatrix& m, const DimVector& dims,
                             std::initializer_list<int> keep) {
  return partial_trace(m, dims, std::span<const int>(keep.begin(), keep.size()));
}

/// Transpose the indices of one subsystem. Involutive.
inline CMatrix partial_transpose(const CMatrix& m, const DimVector& dims, int subsystem) {
  detail::require_square_with_dims(m, dims);
  if (subsystem < 0 || static_cast<std::size_t>(subsystem) >= dims.size()) {
    throw std::out_of_range("partial_transpose: subsystem index out of range");
  }
  const auto s = static_cast<std::size_t>(subsystem);
  Eigen::Index stride = 1;
  for (std::size_t k = s + 1; k < dims.size(); ++k) stride *= dims[k];

  CMatrix out(m.rows(), m.cols());
  std::vector<int> rd, cd;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    detail::split_index(r, dims, rd);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      detail::split_index(c, dims, cd);
      const Eigen::Index shift = (cd[s] - rd[s]) * stride;
      out(r + shift, c - shift) = m(r, c);
    }
  }
  return out;
}

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

inline HermitianEigen eig_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("eig_hermitian: matrix not square");
  if (!all_finite(m)) throw PreconditionError("eig_hermitian: non-finite entries");
  if (hermiticity_error(m) > tol::eig_hermitian) {
    throw PreconditionError("eig_hermitian: matrix is not Hermitian");
  }
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  }
  HermitianEigen out;
  const auto& ev = solver.eigenvalues();
  out.values.assign(ev.data(), ev.data() + ev.size());
  out.vectors = solver.eigenvectors();
  return out;
}

inline std::vector<double> eigenvalues_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("eigenvalues_hermitian: matrix not square");
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Sum of singular values.
inline double trace_norm(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

/// Unit-trace positive semidefinite operator on a labelled factorization.
class DensityOperator {
 public:
  DensityOperator(CMatrix matrix, DimVector dims) : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    detail::require_square_with_dims(matrix_, dims_);
    if (!all_finite(matrix_)) throw PreconditionError("density operator has non-finite entries");
    if (hermiticity_error(matrix_) > tol::hermitian) {
      throw PreconditionError("density operator is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex(1.0)) > tol::unit_trace) {
      throw PreconditionError("density operator trace differs from 1");
    }
    const auto ev = eigenvalues_hermitian(matrix_);
    if (ev.front() < -tol::psd_floor) {
      throw PreconditionError("density operator has negative eigenvalue " +
                              std::to_string(ev.front()));
    }
  }

  explicit DensityOperator(CMatrix matrix)
      : DensityOperator(matrix, DimVector{static_cast<int>(matrix.rows())}) {}

  static DensityOperator pure(const CVector& psi) {
    const CVector n = psi.normalized();
    return DensityOperator(n * n.adjoint());
  }

  static DensityOperator maximally_mixed(int d) {
    return DensityOperator(CMatrix::Identity(d, d) / static_cast<double>(d));
  }

  const CMatrix& matrix() const noexcept { return matrix_; }
  const DimVector& dims() const noexcept { return dims_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }

 private:
  CMatrix matrix_;
  DimVector dims_;
};

/// Entropy of a spectrum, with 0 log 0 := 0.
inline double spectrum_entropy(std::span<const double> eigenvalues, double base = 2.0) {
  if (!(base > 1.0)) throw std::invalid_argument("entropy base must exceed 1");
  const double inv_log_base = 1.0 / std::log(base);
  double s = 0.0;
  for (double v : eigenvalues) {
    if (v > 0.0) s -= v * std::log(v) * inv_log_base;
  }
  return s;
}

inline double von_neumann_entropy(const CMatrix& rho, double base = 2.0) {
  if (!(base > 1.0)) throw std::invalid_argument("entropy base must exceed 1");
  const auto ev = eigenvalues_hermitian(rho);
  return spectrum_entropy(ev, base);
}

inline double von_neumann_entropy(const DensityOperator& rho, double base = 2.0) {
  return von_neumann_entropy(rho.matrix(), base);
}

inline double binary_entropy(double p, double base = 2.0) {
  const double ev[2] = {p, 1.0 - p};
  return spectrum_entropy(ev, base);
}

// |i><j| on a d-dimensional space.
inline CMatrix matrix_unit(int d, int i, int j) {
  CMatrix m = CMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

// Normalized |Phi+> = sum_i |ii> / sqrt(d).
inline CVector max_entangled(int d) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

}  // namespace cswitch
