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

// Monte Carlo run of the heralded two-way protocol up to the point where the
// receiver has announced which pairs went through the E0 branch.

#include <cstdint>

#include "cswitch/channel_kit.hpp"
#include "cswitch/cyclic_switch.hpp"
#include "cswitch/info_analysis.hpp"
#include "cswitch/random.hpp"

namespace cswitch {

struct ProtocolRun {
  int n = 0;
  int d = 0;
  std::uint64_t n_pairs = 0;
  std::uint64_t seed = 0;
  std::uint64_t k_e0 = 0;         // pairs heralded into the E0 branch
  double p = 0.0;                 // closed-form E1 branch probability
  double empirical_p = 0.0;       // 1 - k_e0 / n_pairs
  double e0_choi_fidelity = 0.0;  // <Phi+| Choi state of E0 |Phi+>
  bool e0_distillable = false;    // Choi state of E0 is NPT
  bool e1_ppt = false;
};

/// Infidelity (d^2 - 1) / (N - 1 + d^2) of the E0 Choi state.
inline double heralded_error(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("heralded_error: requires N >= 2 and d >= 2");
  const double d2 = static_cast<double>(d) * d;
  return (d2 - 1.0) / (n - 1.0 + d2);
}

/// Each pair is heralded into E0 with probability 1 - p. The remaining
/// protocol steps (distillation, teleportation, coding) are summarized by the
/// per-branch distillability verdicts.
inline ProtocolRun run_protocol(int n, int d, std::uint64_t n_pairs, std::uint64_t seed) {
  if (n_pairs < 1) throw std::invalid_argument("run_protocol: n_pairs must be >= 1");
  ProtocolRun run;
  run.n = n;
  run.d = d;
  run.n_pairs = n_pairs;
  run.seed = seed;
  run.p = heralding_probability(n, d);

  Rng rng(seed);
  const double good = 1.0 - run.p;
  for (std::uint64_t i = 0; i < n_pairs; ++i) {
    if (uniform01(rng) < good) ++run.k_e0;
  }
  run.empirical_p = 1.0 - static_cast<double>(run.k_e0) / static_cast<double>(n_pairs);

  const auto e0_state = kraus_to_choi(e0_channel(n, d), ChoiConvention::State);
  const CVector phi = max_entangled(d);
  run.e0_choi_fidelity = (phi.adjoint() * e0_state.matrix() * phi)(0, 0).real();
  run.e0_distillable = !ppt_check(e0_state).is_ppt;
  run.e1_ppt = ppt_check(e1_choi(d).with_convention(ChoiConvention::State)).is_ppt;
  return run;
}

}  // namespace cswitch
