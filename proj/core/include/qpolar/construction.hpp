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
#include <vector>

#include "qpolar/bitword.hpp"
#include "qpolar/channels.hpp"
#include "qpolar/rng.hpp"
#include "qpolar/transform.hpp"

namespace qpolar {

/// What a reliability number means: an exact erasure probability for the
/// BEC recursion, or a Monte Carlo first-decision error rate.
enum class ReliabilityMetric { kErasureProbability, kErrorRate };

struct MethodInfo {
  enum class Kind { kExactBec, kMonteCarlo, kFidelityBound };
  Kind kind = Kind::kExactBec;
  std::uint64_t trials = 0;  // Monte Carlo only
  std::uint64_t seed = 0;    // Monte Carlo only
};

/// Per-index unreliability of the two decoding stages. Both vectors are
/// indexed by the amplitude logical index; phase[j] already incorporates
/// the index reversal described at reverse_index_profile.
struct ReliabilityProfile {
  std::size_t n = 0;
  std::vector<double> amp;
  std::vector<double> phase;
  ReliabilityMetric metric = ReliabilityMetric::kErasureProbability;
  MethodInfo method;

  void validate() const;
};

/// Exact per-index erasure probabilities of the polar-transformed BEC(p):
/// k levels of z -> 2z - z^2 on the degrading branch (index bit 0) and
/// z -> z^2 on the upgrading branch (index bit 1), in the index convention
/// of encode(). O(n) time and memory.
std::vector<double> bec_reliability(double p, std::size_t n);

/// Genie-aided Monte Carlo estimate of per-index first-decision failure
/// rates in the amplitude index order. A decision counts as failed when it
/// mismatches the truth or sits at LLR exactly 0, so the estimate upper
/// bounds the error rate of any tie-breaking rule and reproduces the exact
/// recursion on erasure channels. Deterministic for a given (stream seed,
/// trials) at any worker count: trial t always uses child stream t and the
/// counts are merged by integer addition.
std::vector<double> mc_reliability(const BinaryInputChannel& ch, std::size_t n,
                                   std::uint64_t trials, const Rng& rng,
                                   int threads = 1);

/// Amplitude-to-phase index map. The phase-stage logical channel of input j
/// takes the opposite branch at every recursion level, i.e. its branch
/// string is the bitwise complement, which is index reversal: the phase
/// reliability of input j equals the standard profile at n - 1 - j.
std::vector<double> reverse_index_profile(std::vector<double> profile);

ReliabilityProfile build_bec_profile(double p, std::size_t n);

ReliabilityProfile build_pauli_profile_mc(const PauliChannel& ch, std::size_t n,
                                          std::uint64_t trials, std::uint64_t seed,
                                          int threads = 1);

/// Disjoint cover of {0..n-1} by decoding role, plus frozen words:
///   q: reliable in both stages (data)
///   a: reliable in phase only (amplitude-frozen to g)
///   p: reliable in amplitude only (phase-frozen to h)
///   e: reliable in neither (preshared random values, fresh per trial)
struct IndexPartition {
  std::size_t n = 0;
  std::vector<std::uint32_t> q, a, p, e;  // each sorted ascending
  BitWord g;  // one bit per entry of a, in sorted order
  BitWord h;  // one bit per entry of p, in sorted order

  void validate() const;
};

/// Thresholds both reliability vectors at epsilon and buckets the indices.
IndexPartition build_partition(const std::vector<double>& rel_amp,
                               const std::vector<double>& rel_phase,
                               double epsilon);

enum class FrozenPolicy { kAllZero, kRandom };

/// Fills g and h. kAllZero zeroes both; kRandom draws g bits in sorted a
/// order and then h bits in sorted p order from the given stream.
void assign_frozen(IndexPartition& partition, FrozenPolicy policy, Rng rng);

/// (|q| - |e|) / n: qubits sent net of preshared entanglement consumed.
double net_rate(const IndexPartition& partition);

/// |e| / n.
double entanglement_rate(const IndexPartition& partition);

/// Everything the simulator needs to run one code.
struct CodeSpec {
  TransformSpec transform;
  IndexPartition partition;
  double epsilon = 1e-3;
  ChannelSpec channel;
  ReliabilityMetric metric = ReliabilityMetric::kErasureProbability;
  MethodInfo method;
  FrozenPolicy frozen_policy = FrozenPolicy::kAllZero;

  void validate() const;
};

/// End-to-end construction: reliability profiles (exact for erasure, Monte
/// Carlo with `trials` per stage otherwise), partition at epsilon, frozen
/// assignment. The seed fixes both profile estimation and frozen values.
CodeSpec construct_code(const ChannelSpec& channel, std::size_t n, double epsilon,
                        std::uint64_t trials, std::uint64_t seed,
                        FrozenPolicy policy = FrozenPolicy::kAllZero,
                        int threads = 1);

}  // namespace qpolar
