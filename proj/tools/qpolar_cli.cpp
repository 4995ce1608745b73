// Copyright 2026 The qpolar authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Four subcommands cover the batch workflow:
//
//   construct  build a code for a channel and write its JSON description
//   simulate   run Monte Carlo decoding trials against a stored code
//   threshold  solve noise thresholds for a named channel family
//   sweep      construct + simulate across a list of channel strengths, CSV out
//
// Every JSON artifact embeds the resolved configuration (minus worker count
// and output paths) so a run can be reproduced from the artifact alone.
// Outputs are byte-identical across repeat runs and across --threads values.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpolar/channels.hpp"
#include "qpolar/construction.hpp"
#include "qpolar/json_io.hpp"
#include "qpolar/qsim.hpp"
#include "qpolar/rng.hpp"
#include "qpolar/threshold.hpp"

namespace {

/// Command-line level mistake (bad flag value, unknown name). Mapped to exit
/// status 2, while other exceptions map to 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

qpolar::ChannelSpec parse_channel(const std::string& text) {
  try {
    return qpolar::ChannelSpec::parse(text);
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
}

qpolar::FrozenPolicy parse_policy(const std::string& name) {
  if (name == "all-zero") return qpolar::FrozenPolicy::kAllZero;
  if (name == "random") return qpolar::FrozenPolicy::kRandom;
  throw UsageError("unknown frozen policy '" + name +
                   "' (expected all-zero or random)");
}

qpolar::NoiseFamily parse_family(const std::string& name) {
  if (name == "independent-equal") return qpolar::NoiseFamily::kIndependentEqualXz;
  if (name == "depolarizing") return qpolar::NoiseFamily::kDepolarizing;
  throw UsageError("unknown family '" + name +
                   "' (expected independent-equal or depolarizing)");
}

void require_block_length(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) {
    throw UsageError("--n must be a power of two, got " + std::to_string(n));
  }
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw UsageError("--epsilon must lie in (0, 1), got " +
                     format_double(epsilon));
  }
}

void require_trials(std::uint64_t trials) {
  if (trials == 0) throw UsageError("--trials must be at least 1");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

void append_csv_row(const std::string& path, const qpolar::CodeSpec& spec,
                    const qpolar::SimReport& report) {
  namespace fs = std::filesystem;
  const bool need_header = !fs::exists(path) || fs::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path);
  if (need_header) out << qpolar::sweep_csv_header() << '\n';
  out << qpolar::sweep_csv_row(spec, report) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

void print_partition_summary(const qpolar::CodeSpec& spec) {
  const auto& part = spec.partition;
  std::printf("Q=%zu A=%zu P=%zu E=%zu net_rate=%.6f rate_target=%.6f\n",
              part.q.size(), part.a.size(), part.p.size(), part.e.size(),
              qpolar::net_rate(part), spec.channel.rate_target());
}

struct ConstructOpts {
  std::string channel;
  std::size_t n = 0;
  double epsilon = 1e-3;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string policy = "all-zero";
  std::string out;
};

int run_construct(const ConstructOpts& opt) {
  const qpolar::ChannelSpec channel = parse_channel(opt.channel);
  const qpolar::FrozenPolicy policy = parse_policy(opt.policy);
  require_block_length(opt.n);
  require_epsilon(opt.epsilon);
  require_trials(opt.trials);

  const qpolar::CodeSpec spec =
      qpolar::construct_code(channel, opt.n, opt.epsilon, opt.trials, opt.seed,
                             policy, opt.threads);
  const qpolar::ConfigMap config = {
      {"command", "construct"},
      {"channel", channel.canonical()},
      {"n", std::to_string(opt.n)},
      {"epsilon", format_double(opt.epsilon)},
      {"trials", std::to_string(opt.trials)},
      {"seed", std::to_string(opt.seed)},
      {"frozen_policy", opt.policy},
  };
  const std::string text = qpolar::code_spec_to_json(spec, config);

  print_partition_summary(spec);
  if (opt.out.empty()) {
    std::fputs(text.c_str(), stdout);
    std::fputc('\n', stdout);
  } else {
    write_file(opt.out, text);
  }
  return 0;
}

struct SimulateOpts {
  std::string spec_path;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out;
  std::string csv;
};

int run_simulate(const SimulateOpts& opt) {
  require_trials(opt.trials);
  const qpolar::CodeSpec spec =
      qpolar::code_spec_from_json(read_file(opt.spec_path));
  const qpolar::SimReport report =
      qpolar::simulate(spec, opt.trials, opt.seed, opt.threads);
  const qpolar::ConfigMap config = {
      {"command", "simulate"},
      {"spec", opt.spec_path},
      {"trials", std::to_string(opt.trials)},
      {"seed", std::to_string(opt.seed)},
  };
  const std::string text = qpolar::sim_report_to_json(report, spec, config);

  std::printf(
      "trials=%llu amp_err=%.6g phase_err=%.6g block_err=%.6g ci=%.6g\n",
      static_cast<unsigned long long>(report.trials), report.amp_err,
      report.phase_err, report.block_err, report.block_ci);
  if (opt.out.empty()) {
    std::fputs(text.c_str(), stdout);
    std::fputc('\n', stdout);
  } else {
    write_file(opt.out, text);
  }
  if (!opt.csv.empty()) append_csv_row(opt.csv, spec, report);
  return 0;
}

struct ThresholdOpts {
  std::string family;
  double tol = 1e-9;
  std::string out;
};

int run_threshold(const ThresholdOpts& opt) {
  const qpolar::NoiseFamily family = parse_family(opt.family);
  if (!(opt.tol > 0.0)) throw UsageError("--tol must be positive");

  nlohmann::json doc;
  doc["family"] = opt.family;
  doc["tol"] = opt.tol;
  doc["assistance_threshold"] = qpolar::solve_threshold(family, opt.tol);
  doc["coherent_info_zero"] = qpolar::solve_coherent_zero(family, opt.tol);
  const std::string text = doc.dump(2);

  if (opt.out.empty()) {
    std::fputs(text.c_str(), stdout);
    std::fputc('\n', stdout);
  } else {
    write_file(opt.out, text);
  }
  return 0;
}

struct SweepOpts {
  std::string family;
  std::string params;
  std::size_t n = 1024;
  double epsilon = 1e-3;
  std::uint64_t construct_trials = 10000;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out;
};

std::vector<double> parse_param_list(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &consumed);
    } catch (const std::exception&) {
      throw UsageError("bad value '" + token + "' in --params");
    }
    if (consumed != token.size()) {
      throw UsageError("bad value '" + token + "' in --params");
    }
    values.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.empty()) throw UsageError("--params needs at least one value");
  return values;
}

qpolar::ChannelSpec sweep_channel(const std::string& family, double t) {
  if (family == "depolarizing") {
    return parse_channel("depolarizing:q=" + format_double(t));
  }
  if (family == "independent-equal") {
    return parse_channel("xz:du=" + format_double(t) +
                         ",dv=" + format_double(t));
  }
  if (family == "erasure") {
    return parse_channel("erasure:p=" + format_double(t));
  }
  throw UsageError("unknown family '" + family +
                   "' (expected depolarizing, independent-equal, or erasure)");
}

int run_sweep(const SweepOpts& opt) {
  const std::vector<double> params = parse_param_list(opt.params);
  require_block_length(opt.n);
  require_epsilon(opt.epsilon);
  require_trials(opt.construct_trials);
  require_trials(opt.trials);

  std::ostringstream csv;
  csv << qpolar::sweep_csv_header() << '\n';
  std::printf("%s\n", qpolar::sweep_csv_header().c_str());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const qpolar::ChannelSpec channel = sweep_channel(opt.family, params[i]);
    const std::uint64_t construct_seed = qpolar::Rng::derive_seed(opt.seed, 2 * i);
    const std::uint64_t simulate_seed =
        qpolar::Rng::derive_seed(opt.seed, 2 * i + 1);
    const qpolar::CodeSpec spec = qpolar::construct_code(
        channel, opt.n, opt.epsilon, opt.construct_trials, construct_seed,
        qpolar::FrozenPolicy::kAllZero, opt.threads);
    const qpolar::SimReport report =
        qpolar::simulate(spec, opt.trials, simulate_seed, opt.threads);
    const std::string row = qpolar::sweep_csv_row(spec, report);
    csv << row << '\n';
    std::printf("%s\n", row.c_str());
    std::fflush(stdout);
  }
  if (!opt.out.empty()) write_file(opt.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Polar-code construction, decoding simulation, and threshold solving "
      "for Pauli and erasure channels"};
  app.name("qpolar");
  app.require_subcommand(1);

  ConstructOpts construct_opts;
  CLI::App* construct = app.add_subcommand(
      "construct", "Build a code for a channel and emit its JSON description");
  construct->add_option("--channel", construct_opts.channel,
                        "Channel, e.g. depolarizing:q=0.05, xz:du=0.03,dv=0.01, "
                        "pauli:p00=...,p10=...,p01=...,p11=..., erasure:p=0.25")
      ->required();
  construct->add_option("--n", construct_opts.n, "Block length (power of two)")
      ->required();
  construct->add_option("--epsilon", construct_opts.epsilon,
                        "Reliability threshold for good indices");
  construct->add_option("--trials", construct_opts.trials,
                        "Monte Carlo trials per reliability profile");
  construct->add_option("--seed", construct_opts.seed, "Root RNG seed");
  construct->add_option("--threads", construct_opts.threads,
                        "Worker cap; results do not depend on it");
  construct->add_option("--frozen-policy", construct_opts.policy,
                        "Frozen-value policy: all-zero or random");
  construct->add_option("--out", construct_opts.out,
                        "Write the JSON here instead of stdout");

  SimulateOpts simulate_opts;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run decoding trials against a stored code description");
  simulate->add_option("--spec", simulate_opts.spec_path,
                       "CodeSpec JSON file from construct")
      ->required();
  simulate->add_option("--trials", simulate_opts.trials, "Decoding trials");
  simulate->add_option("--seed", simulate_opts.seed, "Root RNG seed");
  simulate->add_option("--threads", simulate_opts.threads,
                       "Worker cap; results do not depend on it");
  simulate->add_option("--out", simulate_opts.out,
                       "Write the report JSON here instead of stdout");
  simulate->add_option("--csv", simulate_opts.csv,
                       "Append one summary row to this CSV file");

  ThresholdOpts threshold_opts;
  CLI::App* threshold = app.add_subcommand(
      "threshold", "Solve noise thresholds for a channel family");
  threshold->add_option("--family", threshold_opts.family,
                        "independent-equal or depolarizing")
      ->required();
  threshold->add_option("--tol", threshold_opts.tol, "Bisection tolerance");
  threshold->add_option("--out", threshold_opts.out,
                        "Write the JSON here instead of stdout");

  SweepOpts sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Construct and simulate across a list of channel strengths");
  sweep->add_option("--family", sweep_opts.family,
                    "depolarizing, independent-equal, or erasure")
      ->required();
  sweep->add_option("--params", sweep_opts.params,
                    "Comma-separated channel strengths, e.g. 0.02,0.04,0.06")
      ->required();
  sweep->add_option("--n", sweep_opts.n, "Block length (power of two)");
  sweep->add_option("--epsilon", sweep_opts.epsilon,
                    "Reliability threshold for good indices");
  sweep->add_option("--construct-trials", sweep_opts.construct_trials,
                    "Monte Carlo trials per reliability profile");
  sweep->add_option("--trials", sweep_opts.trials, "Decoding trials per point");
  sweep->add_option("--seed", sweep_opts.seed,
                    "Root seed; per-point seeds derive from it");
  sweep->add_option("--threads", sweep_opts.threads,
                    "Worker cap; results do not depend on it");
  sweep->add_option("--out", sweep_opts.out, "Write the CSV table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(err);
    }
    std::cerr << err.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  try {
    if (construct->parsed()) return run_construct(construct_opts);
    if (simulate->parsed()) return run_simulate(simulate_opts);
    if (threshold->parsed()) return run_threshold(threshold_opts);
    if (sweep->parsed()) return run_sweep(sweep_opts);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
