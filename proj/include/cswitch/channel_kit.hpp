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

// Channel representations (Kraus and Choi), conversions, composition, the
// Weyl unitary basis and the named channels built from it.

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cswitch/errors.hpp"
#include "cswitch/matrix_core.hpp"
#include "cswitch/random.hpp"
#include "cswitch/tolerances.hpp"

namespace cswitch {

/// Completely positive map rho -> sum_k K_k rho K_k^dag. Not necessarily
/// trace preserving (adjoints, heralded pieces, off-diagonal switch terms).
class KrausMap {
 public:
  KrausMap(int dim_in, int dim_out, std::vector<CMatrix> ops)
      : dim_in_(dim_in), dim_out_(dim_out), ops_(std::move(ops)) {
    if (dim_in < 1 || dim_out < 1) throw std::invalid_argument("KrausMap: dimensions must be >= 1");
    for (const auto& k : ops_) {
      if (k.rows() != dim_out_ || k.cols() != dim_in_) {
        throw DimensionMismatch("KrausMap: operator shape does not match dim_out x dim_in");
      }
      if (!all_finite(k)) throw PreconditionError("KrausMap: non-finite operator entries");
    }
  }

  int dim_in() const noexcept { return dim_in_; }
  int dim_out() const noexcept { return dim_out_; }
  const std::vector<CMatrix>& kraus() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }

  CMatrix apply(const CMatrix& rho) const {
    if (rho.rows() != dim_in_ || rho.cols() != dim_in_) {
      throw DimensionMismatch("KrausMap::apply: input dimension mismatch");
    }
    CMatrix out = CMatrix::Zero(dim_out_, dim_out_);
    for (const auto& k : ops_) out.noalias() += k * rho * k.adjoint();
    return out;
  }

  // sum_k K_k^dag K_k
  CMatrix completeness() const {
    CMatrix s = CMatrix::Zero(dim_in_, dim_in_);
    for (const auto& k : ops_) s.noalias() += k.adjoint() * k;
    return s;
  }

 private:
  int dim_in_;
  int dim_out_;
  std::vector<CMatrix> ops_;
};

/// Kraus representation of a CPTP map.
class KrausChannel {
 public:
  KrausChannel(int dim_in, int dim_out, std::vector<CMatrix> ops)
      : map_(dim_in, dim_out, std::move(ops)) {
    if (map_.size() == 0) throw std::invalid_argument("KrausChannel: empty Kraus list");
    const double err =
        (map_.completeness() - CMatrix::Identity(dim_in, dim_in)).norm();
    if (err > tol::kraus_completeness) {
      throw PreconditionError("KrausChannel: sum K^dag K deviates from identity by " +
                              std::to_string(err));
    }
  }

  explicit KrausChannel(std::vector<CMatrix> ops)
      : KrausChannel(ops.empty() ? 1 : static_cast<int>(ops.front().cols()),
                     ops.empty() ? 1 : static_cast<int>(ops.front().rows()), std::move(ops)) {}

  int dim_in() const noexcept { return map_.dim_in(); }
  int dim_out() const noexcept { return map_.dim_out(); }
  const std::vector<CMatrix>& kraus() const noexcept { return map_.kraus(); }
  std::size_t size() const noexcept { return map_.size(); }
  const KrausMap& map() const noexcept { return map_; }

  CMatrix apply(const CMatrix& rho) const { return map_.apply(rho); }

 private:
  KrausMap map_;
};

inline DensityOperator apply(const KrausChannel& c, const DensityOperator& rho) {
  if (rho.dim() != c.dim_in()) throw DimensionMismatch("apply: channel input dimension mismatch");
  CMatrix out = c.apply(rho.matrix());
  out = 0.5 * (out + out.adjoint());
  return DensityOperator(std::move(out));
}

enum class ChoiConvention {
  Operator,  // sum_ij C(|i><j|) (x) |i><j|, trace dim_in
  State,     // Operator / dim_in, trace 1
};

inline const char* to_string(ChoiConvention c) {
  return c == ChoiConvention::Operator ? "operator" : "state";
}

/// Choi matrix with output factor(s) first and the input factor last.
class ChoiOperator {
 public:
  ChoiOperator(CMatrix matrix, DimVector out_dims, int dim_in, ChoiConvention convention)
      : matrix_(std::move(matrix)),
        out_dims_(std::move(out_dims)),
        dim_in_(dim_in),
        convention_(convention) {
    if (dim_in_ < 1) throw std::invalid_argument("ChoiOperator: dim_in must be >= 1");
    detail::require_square_with_dims(matrix_, dims());
    if (!all_finite(matrix_)) throw PreconditionError("ChoiOperator: non-finite entries");
  }

  const CMatrix& matrix() const noexcept { return matrix_; }
  const DimVector& out_dims() const noexcept { return out_dims_; }
  int dim_in() const noexcept { return dim_in_; }
  int dim_out() const noexcept { return static_cast<int>(out_dims_.total()); }
  ChoiConvention convention() const noexcept { return convention_; }
  DimVector dims() const { return out_dims_.concat(DimVector{dim_in_}); }

  ChoiOperator with_convention(ChoiConvention target) const {
    if (target == convention_) return *this;
    const double scale = target == ChoiConvention::State ? 1.0 / dim_in_ : dim_in_;
    return ChoiOperator(matrix_ * scale, out_dims_, dim_in_, target);
  }

  // Matrix in the operator convention.
  CMatrix operator_matrix() const {
    return convention_ == ChoiConvention::Operator ? matrix_ : CMatrix(matrix_ * double(dim_in_));
  }

  double min_eigenvalue() const { return eigenvalues_hermitian(matrix_).front(); }

  // Frobenius deviation of Tr_out(J) from I_in (operator convention).
  double trace_preservation_error() const {
    const int in_index = static_cast<int>(out_dims_.size());
    const CMatrix reduced = partial_trace(operator_matrix(), dims(), {in_index});
    return (reduced - CMatrix::Identity(dim_in_, dim_in_)).norm();
  }

  bool is_channel(double tol = tol::kraus_completeness) const {
    return hermiticity_error(matrix_) <= tol && min_eigenvalue() >= -tol::choi_psd_floor &&
           trace_preservation_error() <= tol;
  }

  // Action of the represented map: Tr_in[J (I (x) rho^T)].
  CMatrix apply(const CMatrix& rho) const {
    if (rho.rows() != dim_in_ || rho.cols() != dim_in_) {
      throw DimensionMismatch("ChoiOperator::apply: input dimension mismatch");
    }
    const CMatrix j = operator_matrix();
    const Eigen::Index dout = dim_out();
    CMatrix out = CMatrix::Zero(dout, dout);
    for (Eigen::Index a = 0; a < dout; ++a) {
      for (Eigen::Index b = 0; b < dout; ++b) {
        Complex s = 0.0;
        for (int i = 0; i < dim_in_; ++i) {
          for (int k = 0; k < dim_in_; ++k) {
            s += j(a * dim_in_ + i, b * dim_in_ + k) * rho(i, k);
          }
        }
        out(a, b) = s;
      }
    }
    return out;
  }

 private:
  CMatrix matrix_;
  DimVector out_dims_;
  int dim_in_;
  ChoiConvention convention_;
};

/// Choi matrix of an arbitrary linear map, built from its action on |i><j|.
inline ChoiOperator choi_of_linear_map(const std::function<CMatrix(const CMatrix&)>& f, int dim_in,
                                       const DimVector& out_dims, ChoiConvention convention) {
  const Eigen::Index dout = out_dims.total();
  CMatrix j = CMatrix::Zero(dout * dim_in, dout * dim_in);
  for (int a = 0; a < dim_in; ++a) {
    for (int b = 0; b < dim_in; ++b) {
      const CMatrix image = f(matrix_unit(dim_in, a, b));
      if (image.rows() != dout || image.cols() != dout) {
        throw DimensionMismatch("choi_of_linear_map: image dimension mismatch");
      }
      for (Eigen::Index r = 0; r < dout; ++r) {
        for (Eigen::Index c = 0; c < dout; ++c) j(r * dim_in + a, c * dim_in + b) = image(r, c);
      }
    }
  }
  if (convention == ChoiConvention::State) j /= static_cast<double>(dim_in);
  return ChoiOperator(std::move(j), out_dims, dim_in, convention);
}

namespace detail {

// Row-major vectorization: v[o * dim_in + i] = K(o, i).
inline CVector vec_row_major(const CMatrix& k) {
  CVector v(k.size());
  for (Eigen::Index o = 0; o < k.rows(); ++o) {
    for (Eigen::Index i = 0; i < k.cols(); ++i) v(o * k.cols() + i) = k(o, i);
  }
  return v;
}

}  // namespace detail

inline ChoiOperator kraus_to_choi(const KrausMap& c, ChoiConvention convention,
                                  DimVector out_dims = {}) {
  if (out_dims.size() == 0) out_dims = DimVector{c.dim_out()};
  if (out_dims.total() != c.dim_out()) throw DimensionMismatch("kraus_to_choi: output dims mismatch");
  const Eigen::Index n = static_cast<Eigen::Index>(c.dim_in()) * c.dim_out();
  CMatrix j = CMatrix::Zero(n, n);
  for (const auto& k : c.kraus()) {
    const CVector v = detail::vec_row_major(k);
    j.noalias() += v * v.adjoint();
  }
  if (convention == ChoiConvention::State) j /= static_cast<double>(c.dim_in());
  return ChoiOperator(std::move(j), std::move(out_dims), c.dim_in(), convention);
}

inline ChoiOperator kraus_to_choi(const KrausChannel& c, ChoiConvention convention,
                                  DimVector out_dims = {}) {
  return kraus_to_choi(c.map(), convention, std::move(out_dims));
}

/// Kraus operators sqrt(mu) * reshape(v) from the Choi eigendecomposition;
/// eigenvalues below tol::kraus_drop are discarded.
inline KrausChannel choi_to_kraus(const ChoiOperator& c) {
  const CMatrix j = c.operator_matrix();
  const auto eig = eig_hermitian(j);
  if (eig.values.front() < -tol::choi_psd_floor * c.dim_in()) {
    throw PreconditionError("choi_to_kraus: Choi matrix is not positive semidefinite (min eigenvalue " +
                            std::to_string(eig.values.front()) + ")");
  }
  const int din = c.dim_in();
  const int dout = c.dim_out();
  std::vector<CMatrix> ops;
  for (std::size_t k = eig.values.size(); k-- > 0;) {
    const double mu = eig.values[k];
    if (mu < tol::kraus_drop) continue;
    CMatrix op(dout, din);
    const double s = std::sqrt(mu);
    for (int o = 0; o < dout; ++o) {
      for (int i = 0; i < din; ++i) op(o, i) = s * eig.vectors(o * din + i, static_cast<Eigen::Index>(k));
    }
    ops.push_back(std::move(op));
  }
  return KrausChannel(din, dout, std::move(ops));
}

/// Trace norm of the difference of two Choi matrices.
inline double choi_distance(const ChoiOperator& a, const ChoiOperator& b) {
  if (a.convention() != b.convention()) {
    throw ConventionMismatch(std::string("choi_distance: ") + to_string(a.convention()) + " vs " +
                             to_string(b.convention()));
  }
  if (a.dim_in() != b.dim_in() || a.out_dims() != b.out_dims()) {
    throw DimensionMismatch("choi_distance: dimension mismatch");
  }
  return trace_norm(a.matrix() - b.matrix());
}

// ---------------------------------------------------------------------------
// Basic channels and operations on channels
// ---------------------------------------------------------------------------

inline KrausChannel identity_channel(int d) {
  return KrausChannel(d, d, {CMatrix::Identity(d, d)});
}

inline KrausChannel unitary_channel(const CMatrix& u) {
  return KrausChannel(static_cast<int>(u.cols()), static_cast<int>(u.rows()), {u});
}

/// rho -> sum K_k^dag rho K_k. Unital; trace preserving only for unital inputs.
inline KrausMap adjoint_channel(const KrausMap& c) {
  std::vector<CMatrix> ops;
  ops.reserve(c.size());
  for (const auto& k : c.kraus()) ops.emplace_back(k.adjoint());
  return KrausMap(c.dim_out(), c.dim_in(), std::move(ops));
}

inline KrausMap adjoint_channel(const KrausChannel& c) {
  return adjoint_channel(c.map());
}

/// a after b: Kraus operators {A_i B_j}.
inline KrausMap compose(const KrausMap& a, const KrausMap& b) {
  if (b.dim_out() != a.dim_in()) throw DimensionMismatch("compose: inner dimensions differ");
  std::vector<CMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) ops.emplace_back(ka * kb);
  }
  return KrausMap(b.dim_in(), a.dim_out(), std::move(ops));
}

inline KrausChannel compose(const KrausChannel& a, const KrausChannel& b) {
  KrausMap m = compose(a.map(), b.map());
  return KrausChannel(m.dim_in(), m.dim_out(), m.kraus());
}

inline KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b) {
  std::vector<CMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) ops.emplace_back(tensor(ka, kb));
  }
  return KrausChannel(a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(), std::move(ops));
}

/// Same channel, different Kraus decomposition: K'_a = sum_b V_ab K_b for a
/// Haar-random isometry V of shape (m + extra) x m.
inline KrausChannel randomize_kraus(const KrausChannel& c, Rng& rng, int extra = 0) {
  const auto m = static_cast<Eigen::Index>(c.size());
  const CMatrix v = haar_isometry(m + extra, m, rng);
  std::vector<CMatrix> ops;
  ops.reserve(static_cast<std::size_t>(m + extra));
  for (Eigen::Index a = 0; a < m + extra; ++a) {
    CMatrix k = CMatrix::Zero(c.dim_out(), c.dim_in());
    for (Eigen::Index b = 0; b < m; ++b) k += v(a, b) * c.kraus()[static_cast<std::size_t>(b)];
    ops.push_back(std::move(k));
  }
  return KrausChannel(c.dim_in(), c.dim_out(), std::move(ops));
}

/// Random channel d_in -> d_out with `rank` Kraus operators from a Haar isometry.
inline KrausChannel random_channel(int dim_in, int dim_out, int rank, Rng& rng) {
  const CMatrix v = haar_isometry(static_cast<Eigen::Index>(dim_out) * rank, dim_in, rng);
  std::vector<CMatrix> ops;
  for (int k = 0; k < rank; ++k) ops.emplace_back(v.block(k * dim_out, 0, dim_out, dim_in));
  return KrausChannel(dim_in, dim_out, std::move(ops));
}

// ---------------------------------------------------------------------------
// Weyl basis and named channels
// ---------------------------------------------------------------------------

/// d^2 unitaries with Tr[U_i^dag U_j] = d delta_ij.
struct UnitaryBasis {
  int d;
  std::vector<CMatrix> elements;
};

/// Shift-and-clock products X^a Z^b, element index a * d + b. Element 0 is I.
inline UnitaryBasis weyl_basis(int d) {
  if (d < 2) throw std::invalid_argument("weyl_basis: d must be >= 2");
  CMatrix shift = CMatrix::Zero(d, d);
  CMatrix clock = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    shift((k + 1) % d, k) = 1.0;
    clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  UnitaryBasis basis{d, {}};
  basis.elements.reserve(static_cast<std::size_t>(d) * d);
  CMatrix xa = CMatrix::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    CMatrix u = xa;
    for (int b = 0; b < d; ++b) {
      basis.elements.push_back(u);
      u = u * clock;
    }
    xa = shift * xa;
  }
  return basis;
}

// Largest deviation from unitarity and from Tr[U_i^dag U_j] = d delta_ij.
inline std::pair<double, double> unitary_basis_errors(const UnitaryBasis& b) {
  double unit = 0.0, ortho = 0.0;
  const auto n = b.elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ui = b.elements[i];
    unit = std::max(unit, (ui.adjoint() * ui - CMatrix::Identity(b.d, b.d)).cwiseAbs().maxCoeff());
    for (std::size_t j = 0; j < n; ++j) {
      const Complex g = (ui.adjoint() * b.elements[j]).trace();
      const double target = i == j ? static_cast<double>(b.d) : 0.0;
      ortho = std::max(ortho, std::abs(g - target));
    }
  }
  return {unit, ortho};
}

// (1/d^2) sum_i U_i M U_i^dag
inline CMatrix basis_twirl(const UnitaryBasis& b, const CMatrix& m) {
  CMatrix out = CMatrix::Zero(b.d, b.d);
  for (const auto& u : b.elements) out.noalias() += u * m * u.adjoint();
  return out / static_cast<double>(b.d * b.d);
}

// sum_i U_i Tr[M U_i^dag]
inline CMatrix basis_expansion(const UnitaryBasis& b, const CMatrix& m) {
  CMatrix out = CMatrix::Zero(b.d, b.d);
  for (const auto& u : b.elements) out += u * (m * u.adjoint()).trace();
  return out;
}

/// lambda * id + (1 - lambda) * D over the Weyl basis.
inline KrausChannel depolarizing(int d, double lambda) {
  if (d < 2) throw std::invalid_argument("depolarizing: d must be >= 2");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("depolarizing: lambda outside [0, 1]");
  const auto basis = weyl_basis(d);
  const double d2 = static_cast<double>(d) * d;
  std::vector<CMatrix> ops;
  ops.reserve(basis.elements.size());
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const double w = (i == 0 ? lambda : 0.0) + (1.0 - lambda) / d2;
    ops.emplace_back(std::sqrt(w) * basis.elements[i]);
  }
  return KrausChannel(d, d, std::move(ops));
}

inline KrausChannel completely_depolarizing(int d) {
  return depolarizing(d, 0.0);
}

/// Identity weight (N - 1) / (N - 1 + d^2) of the good heralded branch.
inline double lambda_e0(int n, int d) {
  if (n < 2) throw std::invalid_argument("lambda_e0: N must be >= 2");
  if (d < 2) throw std::invalid_argument("lambda_e0: d must be >= 2");
  const double nm1 = n - 1.0;
  return nm1 / (nm1 + static_cast<double>(d) * d);
}

inline KrausChannel e0_channel(int n, int d) {
  return depolarizing(d, lambda_e0(n, d));
}

/// Operator-convention Choi of the generalized universal NOT,
/// d / (d^2 - 1) * (I - |Phi+><Phi+|).
inline ChoiOperator e1_choi(int d) {
  if (d < 2) throw std::invalid_argument("e1_choi: d must be >= 2");
  const auto n = static_cast<Eigen::Index>(d) * d;
  const CVector phi = max_entangled(d);
  CMatrix j = (CMatrix::Identity(n, n) - phi * phi.adjoint()) * (static_cast<double>(d) / (d * d - 1.0));
  return ChoiOperator(std::move(j), DimVector{d}, d, ChoiConvention::Operator);
}

/// rho -> (d^2 / (d^2 - 1)) I/d - rho / (d^2 - 1), as the Kraus set of its Choi.
inline KrausChannel e1_channel(int d) {
  return choi_to_kraus(e1_choi(d));
}

// Closed-form action of E1 on an operator (trace-linear).
inline CMatrix e1_action(const CMatrix& rho) {
  const auto d = static_cast<double>(rho.rows());
  return (d / (d * d - 1.0)) * rho.trace() * CMatrix::Identity(rho.rows(), rho.rows()) -
         rho / (d * d - 1.0);
}

/// Isotropic state lambda |Phi+><Phi+| + (1 - lambda) I / d^2 (state convention Choi).
inline ChoiOperator isotropic_choi(int d, double lambda) {
  const auto n = static_cast<Eigen::Index>(d) * d;
  const CVector phi = max_entangled(d);
  CMatrix j = lambda * phi * phi.adjoint() + (1.0 - lambda) * CMatrix::Identity(n, n) / double(n);
  return ChoiOperator(std::move(j), DimVector{d}, d, ChoiConvention::State);
}

// Identity weight of an isotropic d -> d Choi, from its overlap with |Phi+>.
inline double isotropic_lambda(const ChoiOperator& c) {
  const int d = c.dim_in();
  const CVector phi = max_entangled(d);
  const CMatrix state = c.with_convention(ChoiConvention::State).matrix();
  const double overlap = (phi.adjoint() * state * phi)(0, 0).real();
  const double d2 = static_cast<double>(d) * d;
  return (overlap - 1.0 / d2) / (1.0 - 1.0 / d2);
}

/// Monte Carlo estimate of an operator-convention Choi matrix.
struct ChoiEstimate {
  CMatrix mean;
  // sqrt(sum over entries of sample variance / samples): the standard error
  // of the Frobenius distance between `mean` and its expectation.
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Measure-and-prepare form of E1: average over Haar |psi> of
/// (I - |psi><psi|)/(d - 1) (x) d (|psi><psi|)^T.
inline ChoiEstimate unot_measure_prepare_estimate(int d, std::size_t samples, Rng& rng) {
  if (d < 2) throw std::invalid_argument("unot_measure_prepare_estimate: d must be >= 2");
  if (samples < 2) throw std::invalid_argument("unot_measure_prepare_estimate: need >= 2 samples");
  const auto n = static_cast<Eigen::Index>(d) * d;
  CMatrix sum = CMatrix::Zero(n, n);
  Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(n, n);
  const CMatrix id = CMatrix::Identity(d, d);
  for (std::size_t s = 0; s < samples; ++s) {
    const CVector psi = haar_state(d, rng);
    const CMatrix proj = psi * psi.adjoint();
    const CMatrix x = tensor(CMatrix((id - proj) / (d - 1.0)), CMatrix(double(d) * proj.transpose()));
    sum += x;
    sum_sq += x.cwiseAbs2();
  }
  const auto count = static_cast<double>(samples);
  ChoiEstimate out;
  out.mean = sum / count;
  const Eigen::MatrixXd var = (sum_sq / count - out.mean.cwiseAbs2()) * (count / (count - 1.0));
  out.standard_error = std::sqrt(var.sum() / count);
  out.samples = samples;
  return out;
}

}  // namespace cswitch
