// Copyright 2026 The qpolar authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <doctest.h>

#include "qpolar/channels.hpp"
#include "qpolar/construction.hpp"
#include "qpolar/qsim.hpp"
#include "qpolar/rng.hpp"

namespace {

using qpolar::ChannelSpec;
using qpolar::CodeSpec;
using qpolar::construct_code;
using qpolar::exact_block_oracle;
using qpolar::FrozenPolicy;
using qpolar::Rng;
using qpolar::SimReport;
using qpolar::simulate;
using qpolar::TrialResult;
using qpolar::TrialRunner;
using qpolar::wilson_halfwidth;

void check_reports_equal(const SimReport& a, const SimReport& b) {
  CHECK(a.trials == b.trials);
  CHECK(a.seed == b.seed);
  CHECK(a.amp_failures == b.amp_failures);
  CHECK(a.phase_failures == b.phase_failures);
  CHECK(a.block_failures == b.block_failures);
  CHECK(a.amp_err == b.amp_err);
  CHECK(a.phase_err == b.phase_err);
  CHECK(a.block_err == b.block_err);
  CHECK(a.amp_ci == b.amp_ci);
  CHECK(a.phase_ci == b.phase_ci);
  CHECK(a.block_ci == b.block_ci);
  CHECK(a.net_rate == b.net_rate);
  CHECK(a.entanglement_rate == b.entanglement_rate);
}

double three_sigma(double rate, double trials) {
  const double variance = std::max(rate * (1.0 - rate), 1e-6) / trials;
  return 3.0 * std::sqrt(variance);
}

}  // namespace

TEST_SUITE("qsim") {

TEST_CASE("a noiseless channel decodes every trial") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("depolarizing:q=0"), 16, 1e-3, 100, 3);
  TrialRunner runner(spec);
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const TrialResult r = runner.run_trial(rng);
    CHECK(r.amp_ok);
    CHECK(r.phase_ok);
    CHECK(r.block_ok);
    CHECK(r.recovered_u.popcount() == 0);
  }
}

TEST_CASE("a diagnosed amplitude error carries the phase stage on a flip-only channel") {
  const ChannelSpec channel =
      ChannelSpec::parse("pauli:p00=0.7,p10=0.3,p01=0,p11=0");
  const CodeSpec spec = construct_code(channel, 16, 1e-3, 2000, 4);
  TrialRunner runner(spec);
  Rng rng(9);
  int amp_failures = 0;
  for (int t = 0; t < 500; ++t) {
    const TrialResult r = runner.run_trial(rng);
    if (r.amp_ok) {
      CHECK(r.phase_ok);
    } else {
      amp_failures += 1;
    }
    CHECK(r.block_ok == (r.amp_ok && r.phase_ok));
  }
  CHECK(amp_failures < 500);
}

TEST_CASE("block success is the conjunction of the stage successes") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("erasure:p=0.25"), 16, 0.3, 1, 7);
  TrialRunner runner(spec);
  Rng rng(21);
  std::uint64_t amp = 0, phase = 0, block = 0;
  for (int t = 0; t < 300; ++t) {
    const TrialResult r = runner.run_trial(rng);
    CHECK(r.block_ok == (r.amp_ok && r.phase_ok));
    amp += r.amp_ok ? 0 : 1;
    phase += r.phase_ok ? 0 : 1;
    block += r.block_ok ? 0 : 1;
  }
  CHECK(block <= amp + phase);
  CHECK(block >= std::max(amp, phase));

  const SimReport report = simulate(spec, 300, 21);
  CHECK(report.block_failures <= report.amp_failures + report.phase_failures);
  CHECK(report.block_failures >=
        std::max(report.amp_failures, report.phase_failures));
}

TEST_CASE("the wrapper and the reusable runner agree") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("depolarizing:q=0.1"), 32, 1e-2, 2000, 6);
  Rng wrapper_rng(31);
  const TrialResult a = qpolar::run_trial(spec, wrapper_rng);
  TrialRunner runner(spec);
  Rng runner_rng(31);
  const TrialResult b = runner.run_trial(runner_rng);
  CHECK(a.amp_ok == b.amp_ok);
  CHECK(a.phase_ok == b.phase_ok);
  CHECK(a.block_ok == b.block_ok);
  CHECK(a.recovered_u == b.recovered_u);
}

TEST_CASE("a single trial reports rates of zero or one") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("erasure:p=0.25"), 64, 1e-2, 1, 7);
  const SimReport report = simulate(spec, 1, 123);
  CHECK(report.trials == 1);
  for (const double rate : {report.amp_err, report.phase_err, report.block_err}) {
    CHECK((rate == 0.0 || rate == 1.0));
  }
}

TEST_CASE("reports are reproducible and independent of the worker count") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("depolarizing:q=0.05"), 64, 1e-3, 2000, 8);
  const SimReport first = simulate(spec, 2000, 77, 1);
  const SimReport repeat = simulate(spec, 2000, 77, 1);
  const SimReport striped = simulate(spec, 2000, 77, 3);
  check_reports_equal(first, repeat);
  check_reports_equal(first, striped);
  CHECK(first.trials == 2000);
  CHECK(first.seed == 77);
}

TEST_CASE("rates and intervals restate the failure counters") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("erasure:p=0.25"), 16, 0.3, 1, 7);
  const SimReport report = simulate(spec, 500, 13);
  const double trials = 500.0;
  CHECK(report.amp_err == static_cast<double>(report.amp_failures) / trials);
  CHECK(report.phase_err == static_cast<double>(report.phase_failures) / trials);
  CHECK(report.block_err == static_cast<double>(report.block_failures) / trials);
  CHECK(report.amp_ci == wilson_halfwidth(report.amp_failures, 500));
  CHECK(report.phase_ci == wilson_halfwidth(report.phase_failures, 500));
  CHECK(report.block_ci == wilson_halfwidth(report.block_failures, 500));
  CHECK(report.net_rate == qpolar::net_rate(spec.partition));
  CHECK(report.entanglement_rate == qpolar::entanglement_rate(spec.partition));
}

TEST_CASE("the quarter-erasure code at n = 4096 stays under five percent block error") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("erasure:p=0.25"), 4096, 1e-3, 1, 19);
  const SimReport report = simulate(spec, 10000, 5);
  CHECK(report.trials == 10000);
  CHECK(report.block_err < 0.05);
  CHECK(report.net_rate == 0.291015625);
}

TEST_CASE("mild depolarizing noise at n = 1024 stays under five percent block error") {
  const CodeSpec spec = construct_code(ChannelSpec::parse("depolarizing:q=0.05"),
                                       1024, 1e-3, 10000, 11);
  const SimReport report = simulate(spec, 1000, 6);
  CHECK(report.block_err < 0.05);
}

TEST_CASE("frozen values do not shift the error statistics") {
  const ChannelSpec channel = ChannelSpec::parse("depolarizing:q=0.08");
  const CodeSpec zero =
      construct_code(channel, 64, 1e-3, 20000, 15, FrozenPolicy::kAllZero);
  const CodeSpec random =
      construct_code(channel, 64, 1e-3, 20000, 15, FrozenPolicy::kRandom);
  CHECK(zero.partition.q == random.partition.q);
  REQUIRE(zero.partition.a.size() + zero.partition.p.size() > 0);

  const SimReport zero_report = simulate(zero, 3000, 99);
  const SimReport random_report = simulate(random, 3000, 99);
  const double gap = std::abs(zero_report.block_err - random_report.block_err);
  CHECK(gap <= 2.0 * (zero_report.block_ci + random_report.block_ci));
}

TEST_CASE("the Wilson half-width behaves like a confidence radius") {
  const double z2 = 1.959963984540054 * 1.959963984540054;
  CHECK(wilson_halfwidth(0, 1000) ==
        doctest::Approx(z2 / (2.0 * (1000.0 + z2))).epsilon(1e-12));
  CHECK(wilson_halfwidth(50, 1000) > wilson_halfwidth(500, 10000));
  CHECK(wilson_halfwidth(20, 100) == wilson_halfwidth(80, 100));
  CHECK(wilson_halfwidth(0, 100) < wilson_halfwidth(50, 100));
}

TEST_CASE("the exhaustive oracle reports zero for a noiseless channel") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("depolarizing:q=0"), 4, 1e-3, 100, 3);
  CHECK(exact_block_oracle(spec) == 0.0);
}

TEST_CASE("the exhaustive oracle matches sampling on a two-qubit depolarizing code") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("depolarizing:q=0.1"), 2, 0.1, 20000, 41);
  const double exact = exact_block_oracle(spec);
  const SimReport report = simulate(spec, 200000, 8);
  CHECK(std::abs(report.block_err - exact) <= three_sigma(exact, 200000.0));
}

TEST_CASE("the exhaustive oracle matches sampling on an all-data erasure code") {
  CodeSpec spec;
  spec.transform = qpolar::TransformSpec::from_block_length(4);
  spec.partition.n = 4;
  spec.partition.q = {0, 1, 2, 3};
  spec.epsilon = 0.9;
  spec.channel = ChannelSpec::parse("erasure:p=0.5");
  spec.metric = qpolar::ReliabilityMetric::kErasureProbability;
  spec.method.kind = qpolar::MethodInfo::Kind::kExactBec;
  spec.validate();

  const double exact = exact_block_oracle(spec);
  CHECK(exact > 0.0);
  CHECK(exact < 1.0);
  const SimReport report = simulate(spec, 100000, 9);
  CHECK(std::abs(report.block_err - exact) <= three_sigma(exact, 100000.0));
}

TEST_CASE("the exhaustive oracle refuses blocks past its budget") {
  const CodeSpec spec =
      construct_code(ChannelSpec::parse("erasure:p=0.25"), 16, 0.3, 1, 7);
  CHECK_THROWS_AS(exact_block_oracle(spec), std::invalid_argument);
}

}  // TEST_SUITE
