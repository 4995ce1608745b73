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

#include "qpolar/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "qpolar/decoder.hpp"

namespace qpolar {

namespace {

void check_probability(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

void check_sorted_in_range(const std::vector<std::uint32_t>& indices, std::size_t n,
                           const char* what) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= n) {
      throw std::invalid_argument(std::string(what) + ": index out of range");
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw std::invalid_argument(std::string(what) +
                                  ": indices must be strictly increasing");
    }
  }
}

}  // namespace

void ReliabilityProfile::validate() const {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("profile length must be a power of two");
  }
  if (amp.size() != n || phase.size() != n) {
    throw std::invalid_argument("profile vectors must have length n");
  }
  for (const auto* vec : {&amp, &phase}) {
    for (double v : *vec) check_probability(v, "reliability value");
  }
}

std::vector<double> bec_reliability(double p, std::size_t n) {
  check_probability(p, "erasure rate");
  const int k = log2_exact(n);
  std::vector<double> values(n);
  values[0] = p;
  std::size_t size = 1;
  for (int level = 0; level < k; ++level) {
    for (std::size_t j = size; j-- > 0;) {
      const double f = values[j];
      values[2 * j] = 2 * f - f * f;
      values[2 * j + 1] = f * f;
    }
    size *= 2;
  }
  return values;
}

namespace {

struct GenieCounts {
  std::vector<std::uint64_t> failures;
};

void mc_reliability_worker(const BinaryInputChannel& ch, std::size_t n,
                           std::uint64_t trials, const Rng& base, int worker,
                           int stride, GenieCounts* out) {
  const int k = log2_exact(n);
  ScDecoder decoder(k);
  const FrozenMap no_frozen;
  BitWord z(n);
  std::vector<std::uint8_t> symbols(n);
  out->failures.assign(n, 0);
  for (std::uint64_t t = worker; t < trials; t += stride) {
    Rng rng = base.child(t);
    for (std::size_t i = 0; i < n; ++i) z.set(i, rng.bit());
    const BitWord codeword = encode(z);
    for (std::size_t i = 0; i < n; ++i) {
      symbols[i] = static_cast<std::uint8_t>(ch.sample(codeword.get(i), rng));
    }
    const std::vector<double> llr = llr_from_outputs(ch, symbols);
    const ScDecoder::GenieResult result = decoder.genie_decode(llr, z, no_frozen);
    for (std::size_t j = 0; j < n; ++j) {
      out->failures[j] += result.mismatch[j] || result.ambiguous[j] ? 1 : 0;
    }
  }
}

}  // namespace

std::vector<double> mc_reliability(const BinaryInputChannel& ch, std::size_t n,
                                   std::uint64_t trials, const Rng& rng,
                                   int threads) {
  log2_exact(n);
  if (trials == 0) {
    throw std::invalid_argument("Monte Carlo trial count must be positive");
  }
  if (threads < 1) {
    throw std::invalid_argument("worker count must be positive");
  }
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(trials, static_cast<std::uint64_t>(threads)));
  std::vector<GenieCounts> counts(workers);
  if (workers == 1) {
    mc_reliability_worker(ch, n, trials, rng, 0, 1, &counts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(mc_reliability_worker, std::cref(ch), n, trials,
                        std::cref(rng), w, workers, &counts[w]);
    }
    for (auto& th : pool) th.join();
  }
  std::vector<double> estimates(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t total = 0;
    for (const auto& c : counts) total += c.failures[j];
    estimates[j] = static_cast<double>(total) / static_cast<double>(trials);
  }
  return estimates;
}

std::vector<double> reverse_index_profile(std::vector<double> profile) {
  std::reverse(profile.begin(), profile.end());
  return profile;
}

ReliabilityProfile build_bec_profile(double p, std::size_t n) {
  ReliabilityProfile profile;
  profile.n = n;
  profile.amp = bec_reliability(p, n);
  profile.phase = reverse_index_profile(profile.amp);
  profile.metric = ReliabilityMetric::kErasureProbability;
  profile.method.kind = MethodInfo::Kind::kExactBec;
  profile.validate();
  return profile;
}

ReliabilityProfile build_pauli_profile_mc(const PauliChannel& ch, std::size_t n,
                                          std::uint64_t trials, std::uint64_t seed,
                                          int threads) {
  const Rng master(seed);
  ReliabilityProfile profile;
  profile.n = n;
  profile.amp = mc_reliability(induced_amplitude(ch), n, trials, master.child(1), threads);
  profile.phase = reverse_index_profile(
      mc_reliability(induced_extended_phase(ch), n, trials, master.child(2), threads));
  profile.metric = ReliabilityMetric::kErrorRate;
  profile.method.kind = MethodInfo::Kind::kMonteCarlo;
  profile.method.trials = trials;
  profile.method.seed = seed;
  profile.validate();
  return profile;
}

void IndexPartition::validate() const {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("partition size must be a power of two");
  }
  check_sorted_in_range(q, n, "q");
  check_sorted_in_range(a, n, "a");
  check_sorted_in_range(p, n, "p");
  check_sorted_in_range(e, n, "e");
  if (q.size() + a.size() + p.size() + e.size() != n) {
    throw std::invalid_argument("partition must cover every index exactly once");
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (const auto* set : {&q, &a, &p, &e}) {
    for (std::uint32_t idx : *set) {
      if (seen[idx]++) {
        throw std::invalid_argument("partition sets must be disjoint");
      }
    }
  }
  if (g.size() != a.size() || h.size() != p.size()) {
    throw std::invalid_argument("frozen words must match their set sizes");
  }
}

IndexPartition build_partition(const std::vector<double>& rel_amp,
                               const std::vector<double>& rel_phase,
                               double epsilon) {
  if (rel_amp.size() != rel_phase.size()) {
    throw std::invalid_argument("reliability vectors must have equal length");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const std::size_t n = rel_amp.size();
  IndexPartition partition;
  partition.n = n;
  for (std::size_t j = 0; j < n; ++j) {
    const bool amp_good = rel_amp[j] <= epsilon;
    const bool phase_good = rel_phase[j] <= epsilon;
    if (amp_good && phase_good) {
      partition.q.push_back(static_cast<std::uint32_t>(j));
    } else if (!amp_good && phase_good) {
      partition.a.push_back(static_cast<std::uint32_t>(j));
    } else if (amp_good && !phase_good) {
      partition.p.push_back(static_cast<std::uint32_t>(j));
    } else {
      partition.e.push_back(static_cast<std::uint32_t>(j));
    }
  }
  partition.g = BitWord(partition.a.size());
  partition.h = BitWord(partition.p.size());
  partition.validate();
  return partition;
}

void assign_frozen(IndexPartition& partition, FrozenPolicy policy, Rng rng) {
  partition.g = BitWord(partition.a.size());
  partition.h = BitWord(partition.p.size());
  if (policy == FrozenPolicy::kAllZero) return;
  for (std::size_t i = 0; i < partition.a.size(); ++i) partition.g.set(i, rng.bit());
  for (std::size_t i = 0; i < partition.p.size(); ++i) partition.h.set(i, rng.bit());
}

double net_rate(const IndexPartition& partition) {
  return (static_cast<double>(partition.q.size()) -
          static_cast<double>(partition.e.size())) /
         static_cast<double>(partition.n);
}

double entanglement_rate(const IndexPartition& partition) {
  return static_cast<double>(partition.e.size()) / static_cast<double>(partition.n);
}

void CodeSpec::validate() const {
  if (transform.n != partition.n || (std::size_t(1) << transform.k) != transform.n) {
    throw std::invalid_argument("transform and partition sizes disagree");
  }
  partition.validate();
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (!channel.is_erasure()) channel.pauli.validate();
}

CodeSpec construct_code(const ChannelSpec& channel, std::size_t n, double epsilon,
                        std::uint64_t trials, std::uint64_t seed,
                        FrozenPolicy policy, int threads) {
  CodeSpec spec;
  spec.transform = TransformSpec::from_block_length(n);
  spec.epsilon = epsilon;
  spec.channel = channel;
  spec.frozen_policy = policy;
  ReliabilityProfile profile;
  if (channel.is_erasure()) {
    profile = build_bec_profile(channel.erasure_p, n);
  } else {
    profile = build_pauli_profile_mc(channel.pauli, n, trials, seed, threads);
  }
  spec.metric = profile.metric;
  spec.method = profile.method;
  spec.partition = build_partition(profile.amp, profile.phase, epsilon);
  assign_frozen(spec.partition, policy, Rng(seed).child(3));
  spec.validate();
  return spec;
}

}  // namespace qpolar
