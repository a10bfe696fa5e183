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

// Entropies, minimum output entropy, classical capacity of the effective
// channel, PPT and two-way capacity thresholds, and the N = 2 no-go checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cswitch/channel_kit.hpp"
#include "cswitch/cyclic_switch.hpp"
#include "cswitch/matrix_core.hpp"
#include "cswitch/random.hpp"

namespace cswitch {

// ---------------------------------------------------------------------------
// Minimum output entropy
// ---------------------------------------------------------------------------

namespace detail {

inline double pure_output_entropy(const KrausMap& c, const Eigen::VectorXd& x, double base) {
  const Eigen::Index d = x.size() / 2;
  CVector psi(d);
  for (Eigen::Index i = 0; i < d; ++i) psi(i) = Complex(x(i), x(d + i));
  const double nrm = psi.norm();
  if (nrm == 0.0) return std::numeric_limits<double>::infinity();
  psi /= nrm;
  return von_neumann_entropy(c.apply(psi * psi.adjoint()), base);
}

}  // namespace detail

/// Upper bound on S_min found by multi-start coordinate search over pure
/// inputs, parameterized by the real and imaginary parts of an unnormalized
/// vector. Concavity of the entropy makes pure inputs sufficient.
inline double min_output_entropy_numeric(const KrausChannel& c, int restarts = 32, std::uint64_t seed = 1,
                                         double base = 2.0) {
  if (restarts < 1) throw std::invalid_argument("min_output_entropy_numeric: restarts must be >= 1");
  Rng rng(seed);
  const int d = c.dim_in();
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    const CVector start = haar_state(d, rng);
    Eigen::VectorXd x(2 * d);
    for (int i = 0; i < d; ++i) {
      x(i) = start(i).real();
      x(d + i) = start(i).imag();
    }
    double fx = detail::pure_output_entropy(c.map(), x, base);
    double step = 0.25;
    int evaluations = 0;
    while (step > 1e-10 && evaluations < 20000) {
      bool improved = false;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        for (double dir : {1.0, -1.0}) {
          Eigen::VectorXd trial = x;
          trial(i) += dir * step;
          const double ft = detail::pure_output_entropy(c.map(), trial, base);
          ++evaluations;
          if (ft < fx) {
            x = trial / trial.norm();
            fx = ft;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    best = std::min(best, fx);
  }
  return best;
}

/// S_min of lambda * id + (1 - lambda) * D.
inline double s_min_depolarizing(double lambda, int d, double base = 2.0) {
  std::vector<double> spectrum(static_cast<std::size_t>(d), (1.0 - lambda) / d);
  spectrum[0] = lambda + (1.0 - lambda) / d;
  return spectrum_entropy(spectrum, base);
}

inline double s_min_e0_closed(int n, int d, double base = 2.0) {
  return s_min_depolarizing(lambda_e0(n, d), d, base);
}

/// Output spectrum of E1 on any pure state: 1/(d+1) once, d/(d^2-1) (d-1 times).
inline double s_min_e1_closed(int d, double base = 2.0) {
  if (d < 2) throw std::invalid_argument("s_min_e1_closed: d must be >= 2");
  const double dd = d;
  std::vector<double> spectrum(static_cast<std::size_t>(d), dd / (dd * dd - 1.0));
  spectrum[0] = 1.0 / (dd + 1.0);
  return spectrum_entropy(spectrum, base);
}

// ---------------------------------------------------------------------------
// Classical capacity
// ---------------------------------------------------------------------------

struct CapacityReport {
  int n = 0;
  int d = 0;
  double p = 0.0;
  double s_min_e0 = 0.0;  // bits
  double s_min_e1 = 0.0;  // bits
  double capacity = 0.0;  // bits
  double asymptote = 0.0; // bits
};

/// N-independent large-N limit of the capacity, in bits.
inline double capacity_asymptotic(int d) {
  if (d < 2) throw std::invalid_argument("capacity_asymptotic: d must be >= 2");
  const double dd = d;
  return std::log2(dd + 1.0) / (dd * dd) - (1.0 - 1.0 / dd) * std::log2(1.0 - 1.0 / (dd * dd)) -
         std::log2(1.0 + 1.0 / dd) / dd;
}

/// log2 d - (1 - p) S_min(E0) - p S_min(E1).
inline CapacityReport classical_capacity(int n, int d) {
  CapacityReport r;
  r.n = n;
  r.d = d;
  r.p = heralding_probability(n, d);
  r.s_min_e0 = s_min_e0_closed(n, d);
  r.s_min_e1 = s_min_e1_closed(d);
  r.capacity = std::log2(static_cast<double>(d)) - (1.0 - r.p) * r.s_min_e0 - r.p * r.s_min_e1;
  r.asymptote = capacity_asymptotic(d);
  return r;
}

/// Holevo quantity of the uniform computational-basis ensemble, computed
/// from raw output entropies of a channel given by its Choi matrix.
inline double orthogonal_ensemble_holevo(const ChoiOperator& c, double base = 2.0) {
  const int d = c.dim_in();
  CMatrix average = CMatrix::Zero(c.dim_out(), c.dim_out());
  double mean_entropy = 0.0;
  for (int x = 0; x < d; ++x) {
    const CMatrix out = c.apply(matrix_unit(d, x, x));
    average += out / static_cast<double>(d);
    mean_entropy += von_neumann_entropy(out, base) / d;
  }
  return von_neumann_entropy(average, base) - mean_entropy;
}

// ---------------------------------------------------------------------------
// PPT and two-way capacity
// ---------------------------------------------------------------------------

struct PPTVerdict {
  double min_pt_eigenvalue = 0.0;
  bool is_ppt = false;
  DimVector dims;
};

/// Minimum eigenvalue of the partial transpose over the input factor of a
/// state-convention Choi matrix.
inline PPTVerdict ppt_check(const ChoiOperator& c) {
  if (c.convention() != ChoiConvention::State) {
    throw ConventionMismatch("ppt_check: expects a state-convention Choi matrix");
  }
  const DimVector dims = c.dims();
  const CMatrix pt = partial_transpose(c.matrix(), dims, static_cast<int>(dims.size()) - 1);
  const double min_ev = eigenvalues_hermitian(pt).front();
  return PPTVerdict{min_ev, min_ev >= -tol::ppt, dims};
}

/// Q<->(E0) > 0 iff lambda_{N,d} > 1/(d+1), i.e. N > d + 1.
inline bool two_way_capacity_positive(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("two_way_capacity_positive: requires N >= 2 and d >= 2");
  return n > d + 1;
}

/// Noise threshold below which two D_lambda channels in the SWITCH herald a
/// less noisy channel (lambda' >= lambda).
inline double lambda_max(int d) {
  if (d < 2) throw std::invalid_argument("lambda_max: d must be >= 2");
  const double dd = d;
  return (dd * std::sqrt(dd * dd + 8.0) - dd * dd - 2.0) / (2.0 * (dd * dd - 1.0));
}

// ---------------------------------------------------------------------------
// Input-output fidelity
// ---------------------------------------------------------------------------

/// Haar average of <psi| C(|psi><psi|) |psi>, evaluated exactly from the
/// Choi matrix: (Tr J + d <Phi+|J|Phi+>) / (d (d + 1)).
inline double fidelity_functional(const ChoiOperator& c) {
  if (c.dim_in() != c.dim_out()) throw DimensionMismatch("fidelity_functional: channel must be d -> d");
  const int d = c.dim_in();
  const CMatrix j = c.operator_matrix();
  const CVector phi = max_entangled(d);
  const double overlap = (phi.adjoint() * j * phi)(0, 0).real();
  return (j.trace().real() + d * overlap) / (static_cast<double>(d) * (d + 1.0));
}

struct MonteCarloValue {
  double mean = 0.0;
  double standard_error = 0.0;
};

inline MonteCarloValue fidelity_functional_mc(const KrausChannel& c, std::size_t samples, Rng& rng) {
  if (samples < 2) throw std::invalid_argument("fidelity_functional_mc: need >= 2 samples");
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const CVector psi = haar_state(c.dim_in(), rng);
    const double f = (psi.adjoint() * c.apply(psi * psi.adjoint()) * psi)(0, 0).real();
    sum += f;
    sum_sq += f * f;
  }
  const auto n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq / n - mean * mean) * n / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

struct UnotFidelity {
  double exact = 0.0;
  double mc_estimate = 0.0;
  double mc_stderr = 0.0;
};

inline UnotFidelity unot_fidelity(int d, std::size_t mc_samples, std::uint64_t seed) {
  Rng rng(seed);
  const auto mc = fidelity_functional_mc(e1_channel(d), mc_samples, rng);
  return {fidelity_functional(e1_choi(d)), mc.mean, mc.standard_error};
}

// ---------------------------------------------------------------------------
// N = 2 no-go checks
// ---------------------------------------------------------------------------

struct NoGoOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<int> target_dims{2, 3};
  std::vector<int> epm_dims{2, 3, 4};
};

struct NoGoViolation {
  std::uint64_t seed;
  int d;
  std::string check;
  double value;
};

struct NoGoReport {
  int cases = 0;
  double max_adjoint_deviation = 0.0;     // direct vs (I (x) R^dag) o C_eff,omega
  double max_controlled_deviation = 0.0;  // direct vs controlled-adjoint route
  double max_jeff_deviation = 0.0;        // brute force vs J_eff reconstruction
  double min_effective_pt_eigenvalue = std::numeric_limits<double>::infinity();
  double min_epm_pt_eigenvalue = std::numeric_limits<double>::infinity();
  std::vector<NoGoViolation> violations;

  bool passed() const { return violations.empty(); }
};

namespace detail {

inline KrausChannel random_intermediate(int d, Rng& rng) {
  std::uniform_int_distribution<int> rank_dist(1, d * d);
  const int rank = rank_dist(rng);
  if (rank == 1) return unitary_channel(haar_unitary(d, rng));
  return random_channel(d, d, rank, rng);
}

}  // namespace detail

/// Randomized verification that N = 2 completely depolarising channels stay
/// PPT (a necessary condition for entanglement breaking) with arbitrary and
/// controlled intermediate operations, together with the structural
/// identities used to prove it.
inline NoGoReport n2_nogo_check(const NoGoOptions& opts, double identity_tol = 1e-9) {
  NoGoReport report;
  auto record = [&](std::uint64_t s, int d, const char* check, double value) {
    report.violations.push_back({s, d, check, value});
  };
  for (int d : opts.target_dims) {
    for (int t = 0; t < opts.trials; ++t) {
      const std::uint64_t case_seed = opts.seed + static_cast<std::uint64_t>(t) * 7919 + static_cast<std::uint64_t>(d);
      Rng rng(case_seed);
      const ControlState omega(random_density_matrix(2, rng));
      const auto r = detail::random_intermediate(d, rng);
      const auto r2 = detail::random_intermediate(d, rng);

      const auto direct = n2_with_intermediate(r, omega);
      const double adj_dev = choi_distance(direct, n2_with_intermediate_via_adjoint(r, omega));
      report.max_adjoint_deviation = std::max(report.max_adjoint_deviation, adj_dev);
      if (adj_dev > identity_tol) record(case_seed, d, "adjoint-identity", adj_dev);

      const auto adj = adjoint_channel(r);
      const auto jeff_route = detail::map_target_output(jeff_choi(omega, d), adj.kraus(), adj.kraus());
      const double jeff_dev = choi_distance(direct, jeff_route);
      report.max_jeff_deviation = std::max(report.max_jeff_deviation, jeff_dev);
      if (jeff_dev > identity_tol) record(case_seed, d, "jeff-decomposition", jeff_dev);

      const auto controlled = n2_with_controlled_intermediate(r, r2, omega);
      const double ctrl_dev =
          choi_distance(controlled, n2_with_controlled_intermediate_via_adjoint(r, r2, omega));
      report.max_controlled_deviation = std::max(report.max_controlled_deviation, ctrl_dev);
      if (ctrl_dev > identity_tol) record(case_seed, d, "controlled-adjoint-identity", ctrl_dev);

      for (const auto* c : {&direct, &controlled}) {
        const auto v = ppt_check(c->with_convention(ChoiConvention::State));
        report.min_effective_pt_eigenvalue = std::min(report.min_effective_pt_eigenvalue, v.min_pt_eigenvalue);
        if (!v.is_ppt) record(case_seed, d, "effective-ppt", v.min_pt_eigenvalue);
      }
      ++report.cases;
    }
  }
  for (int d : opts.epm_dims) {
    for (int sign : {+1, -1}) {
      const auto v = ppt_check(e_pm_choi(d, sign).with_convention(ChoiConvention::State));
      report.min_epm_pt_eigenvalue = std::min(report.min_epm_pt_eigenvalue, v.min_pt_eigenvalue);
      if (!v.is_ppt) record(opts.seed, d, sign > 0 ? "e-plus-ppt" : "e-minus-ppt", v.min_pt_eigenvalue);
    }
  }
  return report;
}

}  // namespace cswitch
