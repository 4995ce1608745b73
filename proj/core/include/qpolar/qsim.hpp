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

#pragma once

#include <cstdint>
#include <memory>

#include "qpolar/construction.hpp"
#include "qpolar/decoder.hpp"

namespace qpolar {

struct TrialResult {
  bool amp_ok = false;
  bool phase_ok = false;
  bool block_ok = false;  // amp_ok && phase_ok by construction
  /// Diagnosed amplitude error: received word xor re-encoded estimate for
  /// Pauli channels (equals the true X component whenever amp_ok), or the
  /// amplitude-stage erasure mask for erasure channels.
  BitWord recovered_u;
};

/// One two-stage decoding trial of a constructed code. The amplitude stage
/// decodes the data and phase-frozen inputs against the X marginal; the
/// phase stage runs on reversed indices with the diagnosed amplitude error
/// as per-position side information. Erasure codes draw independent erasure
/// masks for the two stages and need no side information.
///
/// Owns reusable workspace; not thread safe, use one per worker.
class TrialRunner {
 public:
  explicit TrialRunner(const CodeSpec& spec);
  ~TrialRunner();
  TrialRunner(TrialRunner&&) noexcept;
  TrialRunner& operator=(TrialRunner&&) noexcept;

  TrialResult run_trial(Rng& rng);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper with a fresh workspace per call.
TrialResult run_trial(const CodeSpec& spec, Rng& rng);

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t amp_failures = 0;
  std::uint64_t phase_failures = 0;
  std::uint64_t block_failures = 0;
  double amp_err = 0.0;
  double phase_err = 0.0;
  double block_err = 0.0;
  double amp_ci = 0.0;    // 95% Wilson half-width
  double phase_ci = 0.0;
  double block_ci = 0.0;
  double net_rate = 0.0;
  double entanglement_rate = 0.0;
};

/// 95% Wilson score interval half-width for `failures` out of `trials`.
double wilson_halfwidth(std::uint64_t failures, std::uint64_t trials);

/// Monte Carlo block/stage error estimation. Trial t always consumes child
/// stream t of the master seed and counters merge by integer addition, so
/// the report is byte-identical for any worker count.
SimReport simulate(const CodeSpec& spec, std::uint64_t trials, std::uint64_t seed,
                   int threads = 1);

/// Exact block error probability by exhaustive enumeration of messages,
/// preshared values, and error patterns (4^n Pauli patterns, or 2^n erasure
/// patterns per stage). Cost is exponential in n and in the message size;
/// n <= 8 is enforced.
double exact_block_oracle(const CodeSpec& spec);

}  // namespace qpolar
