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

// The quantum SWITCH of N channels over a set of causal orders: brute-force
// Kraus expansion, the closed form for completely depolarising inputs under
// cyclic orders, and the heralded two-branch decomposition.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cswitch/channel_kit.hpp"
#include "cswitch/errors.hpp"
#include "cswitch/matrix_core.hpp"

namespace cswitch {

using Permutation = std::vector<int>;

/// Execution orders, each a bijection on {0, ..., N-1}.
class PermSet {
 public:
  PermSet(int n, std::vector<Permutation> perms) : n_(n), perms_(std::move(perms)) {
    if (n_ < 1) throw std::invalid_argument("PermSet: N must be >= 1");
    if (perms_.empty()) throw std::invalid_argument("PermSet: empty permutation list");
    for (const auto& p : perms_) {
      if (static_cast<int>(p.size()) != n_) throw DimensionMismatch("PermSet: permutation length differs from N");
      std::vector<bool> seen(static_cast<std::size_t>(n_), false);
      for (int v : p) {
        if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]) {
          throw std::invalid_argument("PermSet: entry is not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return perms_.size(); }
  const Permutation& operator[](std::size_t i) const { return perms_.at(i); }
  const std::vector<Permutation>& perms() const noexcept { return perms_; }

  // True when the set is exactly {a -> (a + k) mod N : k = 0..N-1} in that order.
  bool is_cyclic() const {
    if (perms_.size() != static_cast<std::size_t>(n_)) return false;
    for (int k = 0; k < n_; ++k) {
      for (int a = 0; a < n_; ++a) {
        if (perms_[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] != (a + k) % n_) return false;
      }
    }
    return true;
  }

 private:
  int n_;
  std::vector<Permutation> perms_;
};

/// The N cyclic shifts a -> (a + k) mod N, identity first.
inline PermSet cyclic_perms(int n) {
  if (n < 2) throw std::invalid_argument("cyclic_perms: N must be >= 2");
  std::vector<Permutation> perms;
  for (int k = 0; k < n; ++k) {
    Permutation p(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) p[static_cast<std::size_t>(a)] = (a + k) % n;
    perms.push_back(std::move(p));
  }
  return PermSet(n, std::move(perms));
}

// |e0> = sum_pi |pi> / sqrt(N)
inline CVector e0_vector(int n) {
  return CVector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

/// State of the order system in the permutation basis.
class ControlState {
 public:
  explicit ControlState(CMatrix omega) : rho_(std::move(omega)) {}

  static ControlState uniform_superposition(int n) {
    const CVector e0 = e0_vector(n);
    return ControlState(e0 * e0.adjoint());
  }
  static ControlState maximally_mixed(int n) {
    return ControlState(CMatrix::Identity(n, n) / static_cast<double>(n));
  }

  const CMatrix& matrix() const noexcept { return rho_.matrix(); }
  int dim() const noexcept { return static_cast<int>(rho_.dim()); }
  const DensityOperator& density() const noexcept { return rho_; }

 private:
  DensityOperator rho_;
};

/// One SWITCH instance: N channels on a d-dimensional target, a control
/// state, and the set of orders the control selects between.
class SwitchSpec {
 public:
  SwitchSpec(int d, std::vector<KrausChannel> channels, ControlState control, PermSet perms)
      : d_(d), channels_(std::move(channels)), control_(std::move(control)), perms_(std::move(perms)) {
    if (channels_.size() != static_cast<std::size_t>(perms_.n())) {
      throw DimensionMismatch("SwitchSpec: channel count differs from permutation length");
    }
    if (static_cast<std::size_t>(control_.dim()) != perms_.size()) {
      throw DimensionMismatch("SwitchSpec: control dimension differs from number of orders");
    }
    for (const auto& c : channels_) {
      if (c.dim_in() != d_ || c.dim_out() != d_) throw DimensionMismatch("SwitchSpec: channel is not d -> d");
    }
  }

  int n() const noexcept { return perms_.n(); }
  int d() const noexcept { return d_; }
  const std::vector<KrausChannel>& channels() const noexcept { return channels_; }
  const ControlState& control() const noexcept { return control_; }
  const PermSet& perms() const noexcept { return perms_; }

 private:
  int d_;
  std::vector<KrausChannel> channels_;
  ControlState control_;
  PermSet perms_;
};

/// N completely depolarising channels, cyclic orders, control |e0>.
inline SwitchSpec depolarizing_cyclic_spec(int n, int d) {
  std::vector<KrausChannel> chans(static_cast<std::size_t>(n), completely_depolarizing(d));
  return SwitchSpec(d, std::move(chans), ControlState::uniform_superposition(n), cyclic_perms(n));
}

inline constexpr std::uint64_t default_kraus_budget = 1'000'000;

/// Ordered product K^(pi(0))_{j[pi(0)]} ... K^(pi(N-1))_{j[pi(N-1)]}, written
/// left to right; the rightmost factor acts on rho first. `j` is indexed by
/// channel label.
inline CMatrix order_kraus(const SwitchSpec& spec, const Permutation& pi, std::span<const int> j) {
  const auto n = static_cast<std::size_t>(spec.n());
  if (pi.size() != n || j.size() != n) throw DimensionMismatch("order_kraus: index length differs from N");
  CMatrix m = CMatrix::Identity(spec.d(), spec.d());
  for (std::size_t a = 0; a < n; ++a) {
    const auto label = static_cast<std::size_t>(pi[a]);
    const auto& ops = spec.channels()[label].kraus();
    const int idx = j[label];
    if (idx < 0 || static_cast<std::size_t>(idx) >= ops.size()) {
      throw std::out_of_range("order_kraus: Kraus index out of range");
    }
    m = m * ops[static_cast<std::size_t>(idx)];
  }
  return m;
}

namespace detail {

inline std::uint64_t kraus_term_count(const SwitchSpec& spec, std::size_t inserted) {
  std::uint64_t total = 1;
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  for (const auto& c : spec.channels()) {
    total = total > cap / c.size() ? cap : total * c.size();
  }
  if (inserted > 0) total = total > cap / inserted ? cap : total * inserted;
  return total;
}

// G = sum over multi-indices of u u^dag with u = (vec K_pi)_pi stacked over
// orders. Block (p, q) of G is the Choi matrix of C_{pi_p pi_q}. When
// `inserted` is given, inserted[p][k] is placed between the first and second
// factor of order p, and k joins the summed multi-index.
inline CMatrix order_gram(const SwitchSpec& spec, const std::vector<std::vector<CMatrix>>* inserted,
                          std::uint64_t budget) {
  const std::size_t n_ins = inserted ? inserted->front().size() : 0;
  const std::uint64_t required = kraus_term_count(spec, n_ins);
  if (required > budget) throw BudgetExceeded(required, budget);

  const int d = spec.d();
  const auto n = static_cast<std::size_t>(spec.n());
  const std::size_t orders = spec.perms().size();
  const Eigen::Index block = static_cast<Eigen::Index>(d) * d;
  const Eigen::Index side = block * static_cast<Eigen::Index>(orders);
  CMatrix gram = CMatrix::Zero(side, side);

  std::vector<int> j(n, 0);
  std::vector<std::size_t> extent(n);
  for (std::size_t i = 0; i < n; ++i) extent[i] = spec.channels()[i].size();
  CVector u(side);
  const std::size_t k_count = inserted ? n_ins : 1;

  // Odometer over (j_0, ..., j_{N-1}); channel 0's index varies fastest.
  while (true) {
    for (std::size_t k = 0; k < k_count; ++k) {
      for (std::size_t p = 0; p < orders; ++p) {
        const auto& pi = spec.perms()[p];
        CMatrix m = CMatrix::Identity(d, d);
        for (std::size_t a = 0; a < n; ++a) {
          const auto label = static_cast<std::size_t>(pi[a]);
          m = m * spec.channels()[label].kraus()[static_cast<std::size_t>(j[label])];
          if (inserted && a == 0) m = m * (*inserted)[p][k];
        }
        for (int o = 0; o < d; ++o) {
          for (int i = 0; i < d; ++i) u(static_cast<Eigen::Index>(p) * block + o * d + i) = m(o, i);
        }
      }
      gram.noalias() += u * u.adjoint();
    }
    std::size_t pos = 0;
    while (pos < n) {
      if (static_cast<std::size_t>(++j[pos]) < extent[pos]) break;
      j[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return gram;
}

// Hadamard-weight block (p, q) of the Gram matrix by omega(p, q).
inline ChoiOperator weight_by_control(CMatrix gram, const CMatrix& omega, int d) {
  const Eigen::Index block = static_cast<Eigen::Index>(d) * d;
  const auto orders = omega.rows();
  for (Eigen::Index p = 0; p < orders; ++p) {
    for (Eigen::Index q = 0; q < orders; ++q) gram.block(p * block, q * block, block, block) *= omega(p, q);
  }
  return ChoiOperator(std::move(gram), DimVector{static_cast<int>(orders), d}, d, ChoiConvention::Operator);
}

}  // namespace detail

/// Operator-convention Choi of the d -> (orders x d) effective channel
/// rho -> sum_{pi,pi'} omega_{pi pi'} |pi><pi'| (x) C_{pi pi'}(rho), by
/// streaming the full Kraus sum. Output dims are {orders, d}.
inline ChoiOperator effective_channel_bruteforce(const SwitchSpec& spec,
                                                 std::uint64_t budget = default_kraus_budget) {
  return detail::weight_by_control(detail::order_gram(spec, nullptr, budget), spec.control().matrix(),
                                   spec.d());
}

/// Choi (operator convention, d -> d) of the generally non-trace-preserving
/// map C_{pi pi'}(rho) = sum_j K_pi(j) rho K_pi'(j)^dag, orders given by
/// their index in spec.perms().
inline ChoiOperator c_pi_pi_prime(const SwitchSpec& spec, std::size_t pi, std::size_t pi2,
                                  std::uint64_t budget = default_kraus_budget) {
  if (pi >= spec.perms().size() || pi2 >= spec.perms().size()) {
    throw std::out_of_range("c_pi_pi_prime: order index out of range");
  }
  const CMatrix gram = detail::order_gram(spec, nullptr, budget);
  const Eigen::Index block = static_cast<Eigen::Index>(spec.d()) * spec.d();
  CMatrix j = gram.block(static_cast<Eigen::Index>(pi) * block, static_cast<Eigen::Index>(pi2) * block, block,
                         block);
  return ChoiOperator(std::move(j), DimVector{spec.d()}, spec.d(), ChoiConvention::Operator);
}

/// Probability (N - 1)(d^2 - 1) / (N d^2) of the E1 branch.
inline double heralding_probability(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("heralding_probability: requires N >= 2 and d >= 2");
  const double d2 = static_cast<double>(d) * d;
  return (n - 1.0) * (d2 - 1.0) / (n * d2);
}

// rho_0 = |e0><e0|, rho_1 = (I - |e0><e0|) / (N - 1)
inline CMatrix control_rho0(int n) {
  const CVector e0 = e0_vector(n);
  return e0 * e0.adjoint();
}
inline CMatrix control_rho1(int n) {
  return (CMatrix::Identity(n, n) - control_rho0(n)) / (n - 1.0);
}

/// (1 - p) rho_0 (x) E0 + p rho_1 (x) E1 for N completely depolarising
/// channels in cyclic orders with control |e0>.
inline ChoiOperator effective_channel_closed_form(int n, int d) {
  const double p = heralding_probability(n, d);
  const CMatrix j0 = kraus_to_choi(e0_channel(n, d), ChoiConvention::Operator).matrix();
  const CMatrix j1 = e1_choi(d).matrix();
  CMatrix j = (1.0 - p) * tensor(control_rho0(n), j0) + p * tensor(control_rho1(n), j1);
  return ChoiOperator(std::move(j), DimVector{n, d}, d, ChoiConvention::Operator);
}

/// Closed form for a spec, refusing anything outside its domain of validity.
inline ChoiOperator effective_channel_closed_form(const SwitchSpec& spec) {
  const int n = spec.n();
  const int d = spec.d();
  if (!spec.perms().is_cyclic()) throw PreconditionError("closed form requires the cyclic order set");
  if ((spec.control().matrix() - control_rho0(n)).cwiseAbs().maxCoeff() > tol::hermitian) {
    throw PreconditionError("closed form requires the control state |e0><e0|");
  }
  const auto dep = kraus_to_choi(completely_depolarizing(d), ChoiConvention::Operator);
  for (const auto& c : spec.channels()) {
    if (choi_distance(kraus_to_choi(c, ChoiConvention::Operator), dep) > tol::kraus_completeness) {
      throw PreconditionError("closed form requires completely depolarising channels");
    }
  }
  return effective_channel_closed_form(n, d);
}

/// Outcome of measuring the control in {|e0><e0|, I - |e0><e0|}.
struct HeraldedBranch {
  std::size_t outcome = 0;  // 0: |e0><e0|, 1: complement
  double probability = 0.0;
  DensityOperator control_state;
  ChoiOperator choi;  // normalized conditional channel, operator convention
  KrausChannel channel;
};

struct HeraldedDecomposition {
  std::vector<HeraldedBranch> branches;
  // Outcomes dropped because their probability fell below tol::branch_probability.
  std::vector<std::size_t> omitted;
};

/// Split the Choi of a d -> (N x d) channel by the control projectors
/// |e0><e0| and its complement. Branch channels must be trace preserving,
/// i.e. the branch probability must not depend on the input.
inline HeraldedDecomposition heralded_decomposition(const ChoiOperator& choi, int n, int d) {
  if (choi.dim_in() != d || choi.dim_out() != n * d) {
    throw DimensionMismatch("heralded_decomposition: expected the Choi of a d -> N x d channel");
  }
  const CMatrix j = choi.operator_matrix();
  const DimVector dims{n, d, d};
  const CMatrix proj0 = control_rho0(n);
  const CMatrix projectors[2] = {proj0, CMatrix::Identity(n, n) - proj0};
  const auto id_dd = CMatrix::Identity(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  // Control marginal of C(I/d).
  const CMatrix control_marginal = partial_trace(j, dims, {0}) / static_cast<double>(d);

  HeraldedDecomposition out;
  for (std::size_t b = 0; b < 2; ++b) {
    const CMatrix lift = tensor(projectors[b], CMatrix(id_dd));
    const CMatrix projected = lift * j * lift;
    CMatrix branch = partial_trace(projected, dims, {1, 2});
    const double prob = branch.trace().real() / d;
    if (prob < tol::branch_probability) {
      out.omitted.push_back(b);
      continue;
    }
    branch /= prob;
    branch = 0.5 * (branch + branch.adjoint());
    CMatrix control = projectors[b] * control_marginal * projectors[b] / prob;
    control = 0.5 * (control + control.adjoint());
    ChoiOperator branch_choi(branch, DimVector{d}, d, ChoiConvention::Operator);
    KrausChannel channel = choi_to_kraus(branch_choi);
    out.branches.push_back(HeraldedBranch{b, prob, DensityOperator(std::move(control)), std::move(branch_choi),
                                          std::move(channel)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// N = 2 with operations between the two time slots
// ---------------------------------------------------------------------------

namespace detail {

inline SwitchSpec n2_depolarizing_spec(int d, const ControlState& omega) {
  return SwitchSpec(d, {completely_depolarizing(d), completely_depolarizing(d)}, omega, cyclic_perms(2));
}

// Apply a map to the target output factor of an effective-channel Choi.
inline ChoiOperator map_target_output(const ChoiOperator& choi, const std::vector<CMatrix>& ops_per_control0,
                                      const std::vector<CMatrix>& ops_per_control1) {
  const auto& od = choi.out_dims();
  const int n = od[0];
  const int d = od[1];
  const CMatrix j = choi.operator_matrix();
  CMatrix out = CMatrix::Zero(j.rows(), j.cols());
  const CMatrix id_in = CMatrix::Identity(d, d);
  for (std::size_t k = 0; k < ops_per_control0.size(); ++k) {
    CMatrix a = CMatrix::Zero(static_cast<Eigen::Index>(n) * d, static_cast<Eigen::Index>(n) * d);
    a.block(0, 0, d, d) = ops_per_control0[k];
    a.block(d, d, d, d) = ops_per_control1[k];
    const CMatrix lifted = tensor(a, id_in);
    out.noalias() += lifted * j * lifted.adjoint();
  }
  return ChoiOperator(std::move(out), od, choi.dim_in(), ChoiConvention::Operator);
}

inline std::vector<CMatrix> padded_kraus(const KrausChannel& c, std::size_t count) {
  std::vector<CMatrix> ops = c.kraus();
  while (ops.size() < count) ops.emplace_back(CMatrix::Zero(c.dim_out(), c.dim_in()));
  return ops;
}

}  // namespace detail

/// Two completely depolarising channels in both orders with the
/// intermediate channel R between the time slots, by direct Kraus expansion.
inline ChoiOperator n2_with_intermediate(const KrausChannel& r, const ControlState& omega,
                                         std::uint64_t budget = default_kraus_budget) {
  if (r.dim_in() != r.dim_out()) throw DimensionMismatch("n2_with_intermediate: R must be d -> d");
  if (omega.dim() != 2) throw DimensionMismatch("n2_with_intermediate: control must be 2-dimensional");
  const int d = r.dim_in();
  const auto spec = detail::n2_depolarizing_spec(d, omega);
  const std::vector<std::vector<CMatrix>> inserted{r.kraus(), r.kraus()};
  return detail::weight_by_control(detail::order_gram(spec, &inserted, budget), omega.matrix(), d);
}

/// Same channel through (I_C (x) R^dag) o C_eff,omega.
inline ChoiOperator n2_with_intermediate_via_adjoint(const KrausChannel& r, const ControlState& omega,
                                                     std::uint64_t budget = default_kraus_budget) {
  const int d = r.dim_in();
  const auto base = effective_channel_bruteforce(detail::n2_depolarizing_spec(d, omega), budget);
  const KrausMap adj = adjoint_channel(r);
  return detail::map_target_output(base, adj.kraus(), adj.kraus());
}

/// Controlled intermediate operation: R (Kraus R_k) acts in the order
/// selected by control |0>, R' (Kraus R'_k) in the order selected by |1>.
inline ChoiOperator n2_with_controlled_intermediate(const KrausChannel& r0, const KrausChannel& r1,
                                                    const ControlState& omega,
                                                    std::uint64_t budget = default_kraus_budget) {
  if (r0.dim_in() != r1.dim_in() || r0.dim_in() != r0.dim_out() || r1.dim_in() != r1.dim_out()) {
    throw DimensionMismatch("n2_with_controlled_intermediate: R, R' must be d -> d");
  }
  const int d = r0.dim_in();
  const std::size_t count = std::max(r0.size(), r1.size());
  const auto spec = detail::n2_depolarizing_spec(d, omega);
  const std::vector<std::vector<CMatrix>> inserted{detail::padded_kraus(r0, count), detail::padded_kraus(r1, count)};
  return detail::weight_by_control(detail::order_gram(spec, &inserted, budget), omega.matrix(), d);
}

/// Controlled-adjoint route for the same channel. The |0><1| coherence
/// carries sum_k R'_k^dag rho R_k / d^2, so the adjoint of R' acts on the
/// control-|0> block and the adjoint of R on the control-|1> block.
inline ChoiOperator n2_with_controlled_intermediate_via_adjoint(const KrausChannel& r0, const KrausChannel& r1,
                                                                const ControlState& omega,
                                                                std::uint64_t budget = default_kraus_budget) {
  const int d = r0.dim_in();
  const std::size_t count = std::max(r0.size(), r1.size());
  const auto base = effective_channel_bruteforce(detail::n2_depolarizing_spec(d, omega), budget);
  std::vector<CMatrix> a0, a1;
  for (const auto& k : detail::padded_kraus(r1, count)) a0.emplace_back(k.adjoint());
  for (const auto& k : detail::padded_kraus(r0, count)) a1.emplace_back(k.adjoint());
  return detail::map_target_output(base, a0, a1);
}

/// E_+/-(rho) = (d I Tr[rho] +/- rho) / (d^2 +/- 1), operator convention.
inline ChoiOperator e_pm_choi(int d, int sign) {
  const double d2 = static_cast<double>(d) * d;
  const double s = sign >= 0 ? 1.0 : -1.0;
  return choi_of_linear_map(
      [&](const CMatrix& rho) -> CMatrix {
        return (double(d) * rho.trace() * CMatrix::Identity(d, d) + s * rho) / (d2 + s);
      },
      d, DimVector{d}, ChoiConvention::Operator);
}

/// Choi of rho -> J_eff(omega (x) rho) = p+ omega (x) E+(rho) + p- Z omega Z (x) E-(rho).
inline ChoiOperator jeff_choi(const ControlState& omega, int d) {
  if (omega.dim() != 2) throw DimensionMismatch("jeff_choi: control must be 2-dimensional");
  const double d2 = static_cast<double>(d) * d;
  const double p_plus = (d2 + 1.0) / (2.0 * d2);
  const double p_minus = (d2 - 1.0) / (2.0 * d2);
  CMatrix z = CMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  const CMatrix& w = omega.matrix();
  CMatrix j = p_plus * tensor(w, e_pm_choi(d, +1).matrix()) + p_minus * tensor(CMatrix(z * w * z), e_pm_choi(d, -1).matrix());
  return ChoiOperator(std::move(j), DimVector{2, d}, d, ChoiConvention::Operator);
}

// ---------------------------------------------------------------------------
// Two partially depolarising channels, control |+>
// ---------------------------------------------------------------------------

/// Identity weight of the heralded '+' channel for two D_lambda channels.
inline double lambda_prime(double lambda, int d) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda_prime: lambda outside [0, 1]");
  if (d < 2) throw std::invalid_argument("lambda_prime: d must be >= 2");
  const double d2 = static_cast<double>(d) * d;
  const double q = (1.0 - lambda) * (1.0 - lambda);
  return (lambda * lambda + q / (2.0 * d2)) / (1.0 - q * (d2 - 1.0) / (2.0 * d2));
}

struct PartialSwitchResult {
  double lambda_prime = 0.0;
  KrausChannel heralded_plus;
  std::optional<KrausChannel> heralded_minus;  // absent when its weight vanishes
  double plus_weight = 0.0;
  double minus_weight = 0.0;
};

inline PartialSwitchResult partial_switch_n2(double lambda, int d) {
  const double lp = lambda_prime(lambda, d);
  const double d2 = static_cast<double>(d) * d;
  const double minus = (1.0 - lambda) * (1.0 - lambda) * (d2 - 1.0) / (2.0 * d2);
  std::optional<KrausChannel> minus_channel;
  if (minus >= tol::branch_probability) minus_channel = e1_channel(d);
  return PartialSwitchResult{lp, depolarizing(d, std::min(1.0, lp)), std::move(minus_channel), 1.0 - minus, minus};
}

/// Same quantities read off the brute-force SWITCH of two D_lambda channels.
inline PartialSwitchResult partial_switch_n2_bruteforce(double lambda, int d,
                                                        std::uint64_t budget = default_kraus_budget) {
  const auto dl = depolarizing(d, lambda);
  const SwitchSpec spec(d, {dl, dl}, ControlState::uniform_superposition(2), cyclic_perms(2));
  const auto decomposition = heralded_decomposition(effective_channel_bruteforce(spec, budget), 2, d);
  PartialSwitchResult out{0.0, identity_channel(d), std::nullopt, 0.0, 0.0};
  for (const auto& b : decomposition.branches) {
    if (b.outcome == 0) {
      out.lambda_prime = isotropic_lambda(b.choi);
      out.heralded_plus = b.channel;
      out.plus_weight = b.probability;
    } else {
      out.heralded_minus = b.channel;
      out.minus_weight = b.probability;
    }
  }
  return out;
}

}  // namespace cswitch
