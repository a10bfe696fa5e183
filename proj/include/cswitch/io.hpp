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

// Serialization: capacity sweeps (CSV / JSON), Choi matrix dumps, protocol
// reports and the threshold table.

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "cswitch/channel_kit.hpp"
#include "cswitch/info_analysis.hpp"
#include "cswitch/protocol_sim.hpp"

namespace cswitch {

using json = nlohmann::json;

// 17 significant digits: round-trips every double.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

enum class OutputFormat { Csv, Json };

struct SweepConfig {
  std::vector<int> d_values{2, 3, 4, 5};
  int n_min = 2;
  int n_max = 50;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 1;

  void validate() const {
    if (n_min < 2) throw std::invalid_argument("n_min must be >= 2");
    if (n_max < n_min) throw std::invalid_argument("n_max must be >= n_min");
    if (d_values.empty()) throw std::invalid_argument("d_values must be nonempty");
    for (int d : d_values) {
      if (d < 2) throw std::invalid_argument("every d must be >= 2");
    }
  }
};

inline constexpr const char* capacity_csv_header = "N,d,p,s_min_e0,s_min_e1,capacity_bits,asymptote_bits";

/// One report per (d, N) cell, sorted by (d, N). Cells are evaluated on up
/// to `threads` workers; each cell is written to a fixed slot.
inline std::vector<CapacityReport> capacity_sweep(const SweepConfig& cfg, unsigned threads = 1) {
  cfg.validate();
  std::vector<int> ds = cfg.d_values;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  std::vector<std::pair<int, int>> cells;
  for (int d : ds) {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) cells.emplace_back(d, n);
  }
  std::vector<CapacityReport> rows(cells.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < cells.size(); i += threads) {
      rows[i] = classical_capacity(cells[i].second, cells[i].first);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return rows;
}

inline void write_capacity_csv(std::ostream& os, const std::vector<CapacityReport>& rows) {
  os << capacity_csv_header << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.d << ',' << format_double(r.p) << ',' << format_double(r.s_min_e0) << ','
       << format_double(r.s_min_e1) << ',' << format_double(r.capacity) << ',' << format_double(r.asymptote)
       << '\n';
  }
}

inline json capacity_to_json(const std::vector<CapacityReport>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"N", r.n},
                   {"d", r.d},
                   {"p", r.p},
                   {"s_min_e0", r.s_min_e0},
                   {"s_min_e1", r.s_min_e1},
                   {"capacity_bits", r.capacity},
                   {"asymptote_bits", r.asymptote}});
  }
  return arr;
}

/// {dims: [...], convention: "operator"|"state", re: [[...]], im: [[...]]};
/// dims lists the output factors followed by the input.
inline json choi_to_json(const ChoiOperator& c) {
  json re = json::array(), im = json::array();
  const CMatrix& m = c.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(r, k).real());
      ri.push_back(m(r, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"dims", c.dims().values()}, {"convention", to_string(c.convention())}, {"re", re}, {"im", im}};
}

inline ChoiOperator choi_from_json(const json& j) {
  const auto dims = j.at("dims").get<std::vector<int>>();
  if (dims.size() < 2) throw std::invalid_argument("Choi JSON: dims needs at least one output and the input");
  const std::string conv = j.at("convention").get<std::string>();
  ChoiConvention convention;
  if (conv == "operator") {
    convention = ChoiConvention::Operator;
  } else if (conv == "state") {
    convention = ChoiConvention::State;
  } else {
    throw std::invalid_argument("Choi JSON: unknown convention '" + conv + "'");
  }
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const auto n = static_cast<Eigen::Index>(re.size());
  if (static_cast<Eigen::Index>(im.size()) != n) throw DimensionMismatch("Choi JSON: re/im row count differs");
  CMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& rr = re.at(static_cast<std::size_t>(r));
    const auto& ri = im.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(rr.size()) != n || static_cast<Eigen::Index>(ri.size()) != n) {
      throw DimensionMismatch("Choi JSON: matrix is not square");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      m(r, k) = Complex(rr.at(static_cast<std::size_t>(k)).get<double>(), ri.at(static_cast<std::size_t>(k)).get<double>());
    }
  }
  std::vector<int> out(dims.begin(), dims.end() - 1);
  return ChoiOperator(std::move(m), DimVector(std::move(out)), dims.back(), convention);
}

inline json protocol_to_json(const ProtocolRun& r) {
  return {{"N", r.n},
          {"d", r.d},
          {"n_pairs", r.n_pairs},
          {"seed", r.seed},
          {"k_e0", r.k_e0},
          {"p", r.p},
          {"empirical_p", r.empirical_p},
          {"e0_choi_fidelity", r.e0_choi_fidelity},
          {"heralded_error", 1.0 - r.e0_choi_fidelity},
          {"e0_distillable", r.e0_distillable},
          {"e1_ppt", r.e1_ppt},
          {"e1_distillable", false}};
}

struct ThresholdRow {
  int d;
  int least_n;  // least N with positive two-way assisted capacity
  double lambda_max;
  double ppt_boundary;  // 1 / (d + 1)
};

inline std::vector<ThresholdRow> threshold_table(int d_max) {
  if (d_max < 2) throw std::invalid_argument("threshold_table: d_max must be >= 2");
  std::vector<ThresholdRow> rows;
  for (int d = 2; d <= d_max; ++d) {
    int n = 2;
    while (!two_way_capacity_positive(n, d)) ++n;
    rows.push_back({d, n, lambda_max(d), 1.0 / (d + 1.0)});
  }
  return rows;
}

inline void write_threshold_table(std::ostream& os, const std::vector<ThresholdRow>& rows) {
  os << "d,least_N,lambda_max,ppt_boundary\n";
  for (const auto& r : rows) {
    os << r.d << ',' << r.least_n << ',' << format_double(r.lambda_max) << ',' << format_double(r.ppt_boundary)
       << '\n';
  }
}

}  // namespace cswitch
