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


#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cswitch/protocol_sim.hpp"

using namespace cswitch;
using Catch::Matchers::WithinAbs;

TEST_CASE("heralded error") {
  for (int n = 2; n <= 10'000; ++n) CHECK(heralded_error(n, 2) < 4.0 / n);
  for (int d = 2; d <= 5; ++d)
    for (int n = 2; n < 200; ++n) CHECK(heralded_error(n + 1, d) < heralded_error(n, d));
  CHECK(heralded_error(1'000'000, 2) < 3.1e-6);
  CHECK_THROWS_AS(heralded_error(1, 2), std::invalid_argument);
}

TEST_CASE("protocol run at N=100, d=2") {
  const auto run = run_protocol(100, 2, 100'000, 42);
  CHECK_THAT(run.p, WithinAbs(0.7425, 1e-15));
  CHECK(run.k_e0 <= run.n_pairs);
  CHECK(run.empirical_p == 1.0 - static_cast<double>(run.k_e0) / 100'000.0);
  const double se = std::sqrt(run.p * (1.0 - run.p) / 100'000.0);
  CHECK(std::abs(run.empirical_p - run.p) < 4.0 * se);
  CHECK_THAT(run.e0_choi_fidelity, WithinAbs(0.99 / 1.03 + (4.0 / 103.0) / 4.0, 1e-12));
  CHECK_THAT(1.0 - run.e0_choi_fidelity, WithinAbs(heralded_error(100, 2), 1e-12));
  CHECK(1.0 - run.e0_choi_fidelity < 4.0 / 100);
  CHECK(run.e0_distillable);
  CHECK(run.e1_ppt);
}

TEST_CASE("protocol runs are reproducible per seed") {
  const auto a = run_protocol(7, 3, 5000, 9);
  const auto b = run_protocol(7, 3, 5000, 9);
  CHECK(a.k_e0 == b.k_e0);
  CHECK(a.empirical_p == b.empirical_p);
  CHECK(run_protocol(7, 3, 5000, 10).k_e0 != a.k_e0);
}

TEST_CASE("E0 distillability follows the two-way capacity criterion") {
  CHECK_FALSE(run_protocol(2, 2, 10, 1).e0_distillable);
  for (int d = 2; d <= 5; ++d)
    for (int n = 2; n <= 10; ++n) {
      const auto run = run_protocol(n, d, 10, 1);
      CHECK(run.e0_distillable == two_way_capacity_positive(n, d));
      CHECK(run.e1_ppt);
    }
}

TEST_CASE("heralding frequency over many seeds") {
  const double good = 1.0 - heralding_probability(100, 2);
  double sum = 0.0;
  const int seeds = 20;
  const std::uint64_t pairs = 100'000;
  for (int s = 0; s < seeds; ++s) sum += 1.0 - run_protocol(100, 2, pairs, 1000 + s).empirical_p;
  const double pooled_se = std::sqrt(good * (1.0 - good) / (seeds * static_cast<double>(pairs)));
  CHECK(std::abs(sum / seeds - good) < 3.0 * pooled_se);
}

TEST_CASE("protocol rejects empty runs") { CHECK_THROWS_AS(run_protocol(3, 2, 0, 1), std::invalid_argument); }
