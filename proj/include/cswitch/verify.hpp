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

// Cross-module oracle suite: each check compares two independent routes to
// the same quantity and records the largest deviation seen.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cswitch/channel_kit.hpp"
#include "cswitch/cyclic_switch.hpp"
#include "cswitch/info_analysis.hpp"
#include "cswitch/io.hpp"

namespace cswitch {

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_deviation <= tolerance; }
};

struct VerifyOptions {
  std::uint64_t budget = default_kraus_budget;
  std::uint64_t seed = 1;
  // Reference E1 Choi compared against the heralded branch of the brute-force SWITCH.
  std::function<ChoiOperator(int)> e1_reference = e1_choi;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
  std::optional<std::string> first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed()) return c.name;
    }
    return std::nullopt;
  }
};

/// Runs every check. Throws BudgetExceeded when a brute-force expansion does
/// not fit the budget.
inline VerifyReport run_verify(const VerifyOptions& opts) {
  constexpr double tight = 1e-9;
  VerifyReport report;
  // check() hands out references into the vector; keep it from reallocating.
  report.checks.reserve(64);
  auto check = [&](std::string name, double tolerance) -> CheckResult& {
    report.checks.push_back({std::move(name), 0.0, tolerance});
    return report.checks.back();
  };
  auto bump = [](CheckResult& c, double v) { c.max_deviation = std::max(c.max_deviation, v); };
  Rng rng(opts.seed);

  {
    auto& c = check("weyl-basis", tol::basis_orthogonality);
    for (int d = 2; d <= 5; ++d) {
      const auto [unit, ortho] = unitary_basis_errors(weyl_basis(d));
      bump(c, std::max(unit, ortho));
    }
  }
  {
    auto& twirl = check("twirl-identity", 1e-10);
    auto& expand = check("completeness-identity", 1e-10);
    for (int d = 2; d <= 5; ++d) {
      const auto basis = weyl_basis(d);
      for (int t = 0; t < 10; ++t) {
        const CMatrix m = ginibre(d, d, rng);
        bump(twirl, (basis_twirl(basis, m) - m.trace() * CMatrix::Identity(d, d) / double(d)).cwiseAbs().maxCoeff());
        bump(expand, (basis_expansion(basis, m) - double(d) * m).cwiseAbs().maxCoeff());
      }
    }
  }

  const std::pair<int, int> grid[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}};
  {
    auto& diag = check("c-pi-pi-diagonal", 1e-10);
    auto& off = check("c-pi-pi-offdiagonal", 1e-10);
    for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
      const auto spec = depolarizing_cyclic_spec(n, d);
      const CMatrix gram = detail::order_gram(spec, nullptr, opts.budget);
      const auto block = static_cast<Eigen::Index>(d) * d;
      const CMatrix dep = kraus_to_choi(completely_depolarizing(d), ChoiConvention::Operator).matrix();
      const CMatrix id = kraus_to_choi(identity_channel(d), ChoiConvention::Operator).matrix() / double(d * d);
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          const CMatrix b = gram.block(p * block, q * block, block, block);
          bump(p == q ? diag : off, trace_norm(b - (p == q ? dep : id)));
        }
      }
    }
  }
  {
    auto& cf = check("closed-vs-brute", tight);
    auto& tp = check("trace-preservation", tight);
    auto& e0 = check("e0-choi-match", tight);
    auto& e1 = check("e1-choi-match", tight);
    auto& prob = check("heralding-probability", tight);
    for (auto [n, d] : grid) {
      const auto brute = effective_channel_bruteforce(depolarizing_cyclic_spec(n, d), opts.budget);
      bump(cf, choi_distance(brute, effective_channel_closed_form(n, d)));
      bump(tp, brute.trace_preservation_error());
      const auto dec = heralded_decomposition(brute, n, d);
      const double p = heralding_probability(n, d);
      for (const auto& b : dec.branches) {
        if (b.outcome == 0) {
          bump(e0, choi_distance(b.choi, kraus_to_choi(e0_channel(n, d), ChoiConvention::Operator)));
          bump(prob, std::abs(b.probability - (1.0 - p)));
        } else {
          bump(e1, choi_distance(b.choi, opts.e1_reference(d).with_convention(ChoiConvention::Operator)));
          bump(prob, std::abs(b.probability - p));
        }
      }
      if (dec.branches.size() != 2) bump(prob, 1.0);
    }
  }
  {
    auto& c = check("representation-independence", tight);
    const auto reference = effective_channel_bruteforce(depolarizing_cyclic_spec(3, 2), opts.budget);
    for (int t = 0; t < 5; ++t) {
      std::vector<KrausChannel> chans;
      for (int i = 0; i < 3; ++i) chans.push_back(randomize_kraus(completely_depolarizing(2), rng));
      const SwitchSpec spec(2, std::move(chans), ControlState::uniform_superposition(3), cyclic_perms(3));
      bump(c, choi_distance(effective_channel_bruteforce(spec, opts.budget), reference));
    }
  }
  {
    NoGoOptions nogo;
    nogo.trials = 10;
    nogo.seed = opts.seed;
    const auto r = n2_nogo_check(nogo);
    bump(check("adjoint-identity", tight), r.max_adjoint_deviation);
    bump(check("jeff-decomposition", tight), r.max_jeff_deviation);
    bump(check("controlled-adjoint-identity", tight), r.max_controlled_deviation);
    bump(check("n2-ppt", tol::ppt), std::max({0.0, -r.min_effective_pt_eigenvalue, -r.min_epm_pt_eigenvalue}));
  }
  {
    auto& c = check("partial-switch-lambda-prime", tight);
    for (int i = 0; i <= 10; ++i) {
      const double lambda = i / 10.0;
      const auto brute = partial_switch_n2_bruteforce(lambda, 2, opts.budget);
      const auto closed = partial_switch_n2(lambda, 2);
      bump(c, std::abs(brute.lambda_prime - closed.lambda_prime));
      bump(c, std::abs(brute.minus_weight - closed.minus_weight));
    }
  }
  {
    auto& c = check("ppt-threshold", tol::ppt);
    for (int d = 2; d <= 5; ++d) {
      for (int n = 2; n <= 10; ++n) {
        const auto v = ppt_check(kraus_to_choi(e0_channel(n, d), ChoiConvention::State));
        if (v.is_ppt == two_way_capacity_positive(n, d)) bump(c, 1.0);
      }
      const auto boundary = ppt_check(kraus_to_choi(e0_channel(d + 1, d), ChoiConvention::State));
      bump(c, std::abs(boundary.min_pt_eigenvalue));
    }
  }
  {
    auto& c = check("capacity-holevo", tight);
    for (auto [n, d] : grid) {
      const double holevo = orthogonal_ensemble_holevo(effective_channel_closed_form(n, d));
      bump(c, std::abs(holevo - classical_capacity(n, d).capacity));
    }
  }
  return report;
}

inline void write_verify_report(std::ostream& os, const VerifyReport& r) {
  char buf[96];
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "  max_deviation=%.3e  tolerance=%.0e", c.max_deviation, c.tolerance);
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << buf << '\n';
  }
}

}  // namespace cswitch
