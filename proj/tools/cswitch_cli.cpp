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

// Command-line front end: verification suite, capacity sweeps, Choi dumps,
// threshold table and protocol statistics.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/resource/I-O error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cswitch/cswitch.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsageError = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

struct VerifyArgs {
  std::uint64_t budget = cswitch::default_kraus_budget;
  std::uint64_t seed = 1;
  bool inject_e1_sign_error = false;
};

int cmd_verify(const VerifyArgs& args) {
  cswitch::VerifyOptions opts;
  opts.budget = args.budget;
  opts.seed = args.seed;
  if (args.inject_e1_sign_error) {
    // rho -> d^2/(d^2-1) I/d + rho/(d^2-1): the E1 map with the sign of rho flipped.
    opts.e1_reference = [](int d) {
      const double d2 = static_cast<double>(d) * d;
      return cswitch::choi_of_linear_map(
          [=](const cswitch::CMatrix& rho) -> cswitch::CMatrix {
            return (d2 / (d2 - 1.0)) * rho.trace() * cswitch::CMatrix::Identity(d, d) / double(d) +
                   rho / (d2 - 1.0);
          },
          d, cswitch::DimVector{d}, cswitch::ChoiConvention::Operator);
    };
  }
  const auto report = cswitch::run_verify(opts);
  cswitch::write_verify_report(std::cout, report);
  if (const auto failed = report.first_failure()) {
    std::cout << "verification FAILED: " << *failed << '\n';
    return kVerifyFailed;
  }
  std::cout << "verification passed (" << report.checks.size() << " checks)\n";
  return kOk;
}

int cmd_capacity(const cswitch::SweepConfig& cfg, unsigned threads) {
  const auto rows = cswitch::capacity_sweep(cfg, threads);
  std::ostringstream os;
  if (cfg.format == cswitch::OutputFormat::Csv) {
    cswitch::write_capacity_csv(os, rows);
  } else {
    os << cswitch::capacity_to_json(rows).dump(2) << '\n';
  }
  emit(cfg.output_path, os.str());
  return kOk;
}

struct ChoiArgs {
  int n = 3;
  int d = 2;
  std::string form = "closed";
  std::string convention = "operator";
  std::string out;
  std::uint64_t budget = cswitch::default_kraus_budget;
};

int cmd_choi(const ChoiArgs& args) {
  cswitch::ChoiOperator choi = args.form == "brute"
                                   ? cswitch::effective_channel_bruteforce(
                                         cswitch::depolarizing_cyclic_spec(args.n, args.d), args.budget)
                                   : cswitch::effective_channel_closed_form(args.n, args.d);
  if (args.convention == "state") choi = choi.with_convention(cswitch::ChoiConvention::State);
  emit(args.out, cswitch::choi_to_json(choi).dump() + "\n");
  return kOk;
}

int cmd_thresholds(int d_max, const std::string& out) {
  std::ostringstream os;
  cswitch::write_threshold_table(os, cswitch::threshold_table(d_max));
  emit(out, os.str());
  return kOk;
}

struct ProtocolArgs {
  int n = 100;
  int d = 2;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_protocol(const ProtocolArgs& args) {
  const auto run = cswitch::run_protocol(args.n, args.d, args.shots, args.seed);
  emit(args.out, cswitch::protocol_to_json(run).dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum SWITCH of depolarising channels in cyclic orders"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("--budget", verify_args.budget, "Kraus term budget for brute-force expansions");
  verify->add_option("--seed", verify_args.seed, "Seed for randomized checks");
  verify->add_flag("--inject-e1-sign-error", verify_args.inject_e1_sign_error)->group("");

  cswitch::SweepConfig sweep;
  unsigned threads = 1;
  std::string format = "csv";
  auto* capacity = app.add_subcommand("capacity", "Classical capacity sweep over (d, N)");
  capacity->add_option("--d", sweep.d_values, "Target dimensions")->delimiter(',');
  capacity->add_option("--n-min", sweep.n_min, "Smallest N");
  capacity->add_option("--n-max", sweep.n_max, "Largest N");
  capacity->add_option("--out", sweep.output_path, "Output file (stdout if omitted)");
  capacity->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  capacity->add_option("--seed", sweep.seed, "Unused by the closed forms; accepted for uniformity");
  capacity->add_option("--threads", threads, "Worker threads");

  ChoiArgs choi_args;
  auto* choi = app.add_subcommand("choi", "Dump the effective-channel Choi matrix as JSON");
  choi->add_option("--n", choi_args.n, "Number of channels N")->check(CLI::Range(2, 64));
  choi->add_option("--d", choi_args.d, "Target dimension d")->check(CLI::Range(2, 16));
  choi->add_option("--form", choi_args.form, "closed or brute")->check(CLI::IsMember({"closed", "brute"}));
  choi->add_option("--convention", choi_args.convention, "operator or state")
      ->check(CLI::IsMember({"operator", "state"}));
  choi->add_option("--out", choi_args.out, "Output file (stdout if omitted)");
  choi->add_option("--budget", choi_args.budget, "Kraus term budget for --form brute");

  int d_max = 5;
  std::string thresholds_out;
  auto* thresholds = app.add_subcommand("thresholds", "Two-way capacity thresholds and lambda_max per d");
  thresholds->add_option("--d-max", d_max, "Largest d")->check(CLI::Range(2, 1000));
  thresholds->add_option("--out", thresholds_out, "Output file (stdout if omitted)");

  ProtocolArgs protocol_args;
  auto* protocol = app.add_subcommand("protocol", "Heralding statistics of the two-way protocol");
  protocol->add_option("--n", protocol_args.n, "Number of channels N")->check(CLI::Range(2, 1 << 30));
  protocol->add_option("--d", protocol_args.d, "Target dimension d")->check(CLI::Range(2, 1 << 15));
  protocol->add_option("--shots", protocol_args.shots, "Number of pairs")->check(CLI::PositiveNumber);
  protocol->add_option("--seed", protocol_args.seed, "Sampling seed");
  protocol->add_option("--out", protocol_args.out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) return cmd_verify(verify_args);
    if (*capacity) {
      sweep.format = format == "json" ? cswitch::OutputFormat::Json : cswitch::OutputFormat::Csv;
      return cmd_capacity(sweep, threads);
    }
    if (*choi) return cmd_choi(choi_args);
    if (*thresholds) return cmd_thresholds(d_max, thresholds_out);
    if (*protocol) return cmd_protocol(protocol_args);
  } catch (const cswitch::BudgetExceeded& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
