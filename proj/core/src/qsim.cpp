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

#include "qpolar/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qpolar/transform.hpp"

namespace qpolar {

namespace {

std::vector<std::uint32_t> sorted_union(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Precomputed per-stage decoding layout shared by the Monte Carlo runner
/// and the exact oracle: stage channels, free input positions, and frozen
/// maps whose preshared (e) value slots are refreshed per trial.
struct StageLayouts {
  std::size_t n;
  BinaryInputChannel amp_channel;
  BinaryInputChannel phase_channel;

  std::vector<std::uint32_t> amp_free;    // q + p + e, index order
  std::vector<std::uint32_t> phase_free;  // q + a + e, index order

  FrozenMap amp_frozen;                    // positions a + e, values g + fresh
  std::vector<std::size_t> amp_e_slots;    // e value slots within amp_frozen
  FrozenMap phase_frozen;                  // positions reversed(p + e), values h + fresh
  std::vector<std::size_t> phase_e_slots;  // e value slots within phase_frozen

  explicit StageLayouts(const CodeSpec& spec)
      : n(spec.transform.n),
        amp_channel(spec.channel.is_erasure() ? make_bec(spec.channel.erasure_p)
                                              : induced_amplitude(spec.channel.pauli)),
        phase_channel(spec.channel.is_erasure()
                          ? make_bec(spec.channel.erasure_p)
                          : induced_extended_phase(spec.channel.pauli)) {
    const IndexPartition& part = spec.partition;

    amp_free = sorted_union(sorted_union(part.q, part.p), part.e);
    phase_free = sorted_union(sorted_union(part.q, part.a), part.e);

    amp_frozen.positions = sorted_union(part.a, part.e);
    amp_frozen.values = BitWord(amp_frozen.positions.size());
    std::size_t gi = 0;
    for (std::size_t slot = 0; slot < amp_frozen.positions.size(); ++slot) {
      const std::uint32_t pos = amp_frozen.positions[slot];
      if (std::binary_search(part.a.begin(), part.a.end(), pos)) {
        amp_frozen.values.set(slot, part.g.get(gi++));
      } else {
        amp_e_slots.push_back(slot);
      }
    }

    // The phase stage decodes logical input j at position n - 1 - j.
    std::vector<std::uint32_t> p_rev, e_rev;
    p_rev.reserve(part.p.size());
    e_rev.reserve(part.e.size());
    for (std::uint32_t j : part.p) p_rev.push_back(static_cast<std::uint32_t>(n - 1 - j));
    for (std::uint32_t j : part.e) e_rev.push_back(static_cast<std::uint32_t>(n - 1 - j));
    std::sort(p_rev.begin(), p_rev.end());
    std::sort(e_rev.begin(), e_rev.end());
    phase_frozen.positions = sorted_union(p_rev, e_rev);
    phase_frozen.values = BitWord(phase_frozen.positions.size());
    for (std::size_t slot = 0; slot < phase_frozen.positions.size(); ++slot) {
      const std::uint32_t pos = phase_frozen.positions[slot];
      if (std::binary_search(p_rev.begin(), p_rev.end(), pos)) {
        const std::uint32_t j = static_cast<std::uint32_t>(n - 1 - pos);
        const auto it = std::lower_bound(part.p.begin(), part.p.end(), j);
        phase_frozen.values.set(slot, part.h.get(static_cast<std::size_t>(it - part.p.begin())));
      } else {
        phase_e_slots.push_back(slot);
      }
    }

    amp_frozen.validate(n);
    phase_frozen.validate(n);
  }

  /// Syncs the preshared value slots of the amplitude frozen map from an
  /// input word that already carries the e bits.
  void refresh_amp_frozen(const BitWord& z) {
    for (std::size_t slot : amp_e_slots) {
      amp_frozen.values.set(slot, z.get(amp_frozen.positions[slot]));
    }
  }

  void refresh_phase_frozen(const BitWord& x) {
    for (std::size_t slot : phase_e_slots) {
      phase_frozen.values.set(slot, x.get(n - 1 - phase_frozen.positions[slot]));
    }
  }

  /// Estimate in reversed order == logical input word?
  static bool reversed_equal(const BitWord& estimate_rev, const BitWord& input) {
    const std::size_t n = input.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (estimate_rev.get(i) != input.get(n - 1 - i)) return false;
    }
    return true;
  }
};

}  // namespace

struct TrialRunner::Impl {
  CodeSpec spec;
  StageLayouts layout;
  ScDecoder decoder;
  BitWord z, x;
  std::vector<std::uint8_t> symbols;
  std::vector<double> llr;

  explicit Impl(const CodeSpec& s)
      : spec((s.validate(), s)),
        layout(spec),
        decoder(spec.transform.k),
        z(spec.transform.n),
        x(spec.transform.n),
        symbols(spec.transform.n),
        llr(spec.transform.n) {
    const IndexPartition& part = spec.partition;
    for (std::size_t gi = 0; gi < part.a.size(); ++gi) {
      z.set(part.a[gi], part.g.get(gi));
    }
    for (std::size_t hi = 0; hi < part.p.size(); ++hi) {
      x.set(part.p[hi], part.h.get(hi));
    }
  }

  TrialResult run(Rng& rng) {
    const std::size_t n = layout.n;

    // Fresh data, phase-frozen, and preshared bits for the amplitude word;
    // the a positions keep their g values from construction time.
    for (std::uint32_t j : layout.amp_free) z.set(j, rng.bit());
    layout.refresh_amp_frozen(z);

    TrialResult result;
    if (spec.channel.is_erasure()) {
      const BitWord amp_mask = sample_erasure_mask(spec.channel.erasure_p, n, rng);

      for (std::uint32_t j : layout.phase_free) x.set(j, rng.bit());
      layout.refresh_phase_frozen(x);
      const BitWord phase_mask = sample_erasure_mask(spec.channel.erasure_p, n, rng);

      const BitWord codeword = encode(z);
      for (std::size_t i = 0; i < n; ++i) {
        symbols[i] = amp_mask.get(i) ? 2 : static_cast<std::uint8_t>(codeword.get(i));
      }
      for (std::size_t i = 0; i < n; ++i) llr[i] = layout.amp_channel.llr(symbols[i]);
      const BitWord z_hat = decoder.decode(llr, layout.amp_frozen);
      result.amp_ok = z_hat == z;
      result.recovered_u = amp_mask;

      const BitWord phase_word = encode_transpose(x);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = n - 1 - i;
        symbols[i] =
            phase_mask.get(src) ? 2 : static_cast<std::uint8_t>(phase_word.get(src));
      }
      for (std::size_t i = 0; i < n; ++i) llr[i] = layout.phase_channel.llr(symbols[i]);
      const BitWord x_hat_rev = decoder.decode(llr, layout.phase_frozen);
      result.phase_ok = StageLayouts::reversed_equal(x_hat_rev, x);
    } else {
      const ErrorPattern err = sample_error(spec.channel.pauli, n, rng);

      for (std::uint32_t j : layout.phase_free) x.set(j, rng.bit());
      layout.refresh_phase_frozen(x);

      BitWord received = encode(z);
      received.xor_with(err.u);
      for (std::size_t i = 0; i < n; ++i) {
        symbols[i] = static_cast<std::uint8_t>(received.get(i));
      }
      for (std::size_t i = 0; i < n; ++i) llr[i] = layout.amp_channel.llr(symbols[i]);
      const BitWord z_hat = decoder.decode(llr, layout.amp_frozen);
      result.amp_ok = z_hat == z;
      result.recovered_u = encode(z_hat);
      result.recovered_u.xor_with(received);

      BitWord phase_word = encode_transpose(x);
      phase_word.xor_with(err.v);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = n - 1 - i;
        symbols[i] = static_cast<std::uint8_t>(
            phase_word.get(src) | (result.recovered_u.get(src) << 1));
      }
      for (std::size_t i = 0; i < n; ++i) llr[i] = layout.phase_channel.llr(symbols[i]);
      const BitWord x_hat_rev = decoder.decode(llr, layout.phase_frozen);
      result.phase_ok = StageLayouts::reversed_equal(x_hat_rev, x);
    }
    result.block_ok = result.amp_ok && result.phase_ok;
    return result;
  }
};

TrialRunner::TrialRunner(const CodeSpec& spec) : impl_(std::make_unique<Impl>(spec)) {}
TrialRunner::~TrialRunner() = default;
TrialRunner::TrialRunner(TrialRunner&&) noexcept = default;
TrialRunner& TrialRunner::operator=(TrialRunner&&) noexcept = default;

TrialResult TrialRunner::run_trial(Rng& rng) { return impl_->run(rng); }

TrialResult run_trial(const CodeSpec& spec, Rng& rng) {
  return TrialRunner(spec).run_trial(rng);
}

double wilson_halfwidth(std::uint64_t failures, std::uint64_t trials) {
  if (trials == 0) return 1.0;
  if (failures > trials) {
    throw std::invalid_argument("failure count exceeds trial count");
  }
  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double m = static_cast<double>(trials);
  const double p_hat = static_cast<double>(failures) / m;
  const double z2 = z * z;
  return (z / (1.0 + z2 / m)) *
         std::sqrt(p_hat * (1.0 - p_hat) / m + z2 / (4.0 * m * m));
}

namespace {

struct TrialCounts {
  std::uint64_t amp = 0, phase = 0, block = 0;
};

void simulate_worker(const CodeSpec& spec, std::uint64_t trials, const Rng& base,
                     int worker, int stride, TrialCounts* out) {
  TrialRunner runner(spec);
  for (std::uint64_t t = worker; t < trials; t += stride) {
    Rng rng = base.child(t);
    const TrialResult result = runner.run_trial(rng);
    out->amp += result.amp_ok ? 0 : 1;
    out->phase += result.phase_ok ? 0 : 1;
    out->block += result.block_ok ? 0 : 1;
  }
}

}  // namespace

SimReport simulate(const CodeSpec& spec, std::uint64_t trials, std::uint64_t seed,
                   int threads) {
  spec.validate();
  if (trials == 0) {
    throw std::invalid_argument("trial count must be positive");
  }
  if (threads < 1) {
    throw std::invalid_argument("worker count must be positive");
  }
  const Rng master(seed);
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(trials, static_cast<std::uint64_t>(threads)));
  std::vector<TrialCounts> counts(workers);
  if (workers == 1) {
    simulate_worker(spec, trials, master, 0, 1, &counts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(simulate_worker, std::cref(spec), trials, std::cref(master),
                        w, workers, &counts[w]);
    }
    for (auto& th : pool) th.join();
  }
  SimReport report;
  report.trials = trials;
  report.seed = seed;
  for (const auto& c : counts) {
    report.amp_failures += c.amp;
    report.phase_failures += c.phase;
    report.block_failures += c.block;
  }
  const double m = static_cast<double>(trials);
  report.amp_err = static_cast<double>(report.amp_failures) / m;
  report.phase_err = static_cast<double>(report.phase_failures) / m;
  report.block_err = static_cast<double>(report.block_failures) / m;
  report.amp_ci = wilson_halfwidth(report.amp_failures, trials);
  report.phase_ci = wilson_halfwidth(report.phase_failures, trials);
  report.block_ci = wilson_halfwidth(report.block_failures, trials);
  report.net_rate = net_rate(spec.partition);
  report.entanglement_rate = entanglement_rate(spec.partition);
  return report;
}

namespace {

void scatter_bits(BitWord& word, const std::vector<std::uint32_t>& positions,
                  std::uint64_t mask) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    word.set(positions[i], static_cast<int>((mask >> i) & 1));
  }
}

double pauli_pattern_prob(const PauliChannel& ch, std::size_t n, std::uint64_t u_pat,
                          std::uint64_t v_pat) {
  double prob = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    prob *= ch.prob(static_cast<int>((u_pat >> i) & 1),
                    static_cast<int>((v_pat >> i) & 1));
  }
  return prob;
}

double mask_prob(double p, std::size_t n, std::uint64_t mask) {
  double prob = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    prob *= ((mask >> i) & 1) ? p : 1.0 - p;
  }
  return prob;
}

}  // namespace

double exact_block_oracle(const CodeSpec& spec) {
  spec.validate();
  const std::size_t n = spec.transform.n;
  if (n > 8) {
    throw std::invalid_argument("exact enumeration supports n <= 8 only");
  }
  const IndexPartition& part = spec.partition;
  const std::vector<std::uint32_t> amp_msg = sorted_union(part.q, part.p);
  const std::vector<std::uint32_t> phase_msg = sorted_union(part.q, part.a);
  const std::size_t e_size = part.e.size();
  StageLayouts layout(spec);
  ScDecoder decoder(spec.transform.k);
  std::vector<std::uint8_t> symbols(n);
  std::vector<double> llr(n);

  const std::uint64_t e_count = std::uint64_t(1) << e_size;

  if (spec.channel.is_erasure()) {
    // The stages share no randomness for erasure codes, so each failure
    // probability is enumerated on its own and the two combine by
    // independence.
    const double p = spec.channel.erasure_p;
    const auto stage_fail = [&](bool phase_stage) {
      const auto& msg = phase_stage ? phase_msg : amp_msg;
      const double assignment_weight =
          1.0 / static_cast<double>(std::uint64_t(1) << (msg.size() + e_size));
      double fail = 0.0;
      for (std::uint64_t mv = 0; mv < (std::uint64_t(1) << msg.size()); ++mv) {
        for (std::uint64_t ev = 0; ev < e_count; ++ev) {
          BitWord input(n);
          scatter_bits(input, msg, mv);
          scatter_bits(input, part.e, ev);
          if (phase_stage) {
            for (std::size_t hi = 0; hi < part.p.size(); ++hi) {
              input.set(part.p[hi], part.h.get(hi));
            }
            layout.refresh_phase_frozen(input);
          } else {
            for (std::size_t gi = 0; gi < part.a.size(); ++gi) {
              input.set(part.a[gi], part.g.get(gi));
            }
            layout.refresh_amp_frozen(input);
          }
          const BitWord codeword =
              phase_stage ? encode_transpose(input) : encode(input);
          const BinaryInputChannel& channel =
              phase_stage ? layout.phase_channel : layout.amp_channel;
          const FrozenMap& frozen =
              phase_stage ? layout.phase_frozen : layout.amp_frozen;
          for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            for (std::size_t i = 0; i < n; ++i) {
              const std::size_t src = phase_stage ? n - 1 - i : i;
              symbols[i] = ((mask >> src) & 1)
                               ? 2
                               : static_cast<std::uint8_t>(codeword.get(src));
            }
            for (std::size_t i = 0; i < n; ++i) llr[i] = channel.llr(symbols[i]);
            const BitWord estimate = decoder.decode(llr, frozen);
            const bool ok = phase_stage ? StageLayouts::reversed_equal(estimate, input)
                                        : estimate == input;
            if (!ok) fail += mask_prob(p, n, mask) * assignment_weight;
          }
        }
      }
      return fail;
    };
    const double amp_fail = stage_fail(false);
    const double phase_fail = stage_fail(true);
    return amp_fail + phase_fail - amp_fail * phase_fail;
  }

  const PauliChannel& pauli = spec.channel.pauli;
  const std::uint64_t amp_msg_count = std::uint64_t(1) << amp_msg.size();
  const std::uint64_t phase_msg_count = std::uint64_t(1) << phase_msg.size();
  const double assignment_weight =
      1.0 / (static_cast<double>(amp_msg_count) * static_cast<double>(e_count) *
             static_cast<double>(phase_msg_count) * static_cast<double>(e_count));

  // Phase-side words do not depend on the error pattern; precompute every
  // (message, preshared) assignment once.
  struct PhaseCase {
    BitWord input;
    BitWord codeword;
    BitWord frozen_values;
  };
  std::vector<PhaseCase> phase_cases;
  phase_cases.reserve(phase_msg_count * e_count);
  for (std::uint64_t mv = 0; mv < phase_msg_count; ++mv) {
    for (std::uint64_t ev = 0; ev < e_count; ++ev) {
      BitWord input(n);
      scatter_bits(input, phase_msg, mv);
      scatter_bits(input, part.e, ev);
      for (std::size_t hi = 0; hi < part.p.size(); ++hi) {
        input.set(part.p[hi], part.h.get(hi));
      }
      layout.refresh_phase_frozen(input);
      phase_cases.push_back(
          {input, encode_transpose(input), layout.phase_frozen.values});
    }
  }

  double fail = 0.0;
  for (std::uint64_t mv = 0; mv < amp_msg_count; ++mv) {
    for (std::uint64_t ev = 0; ev < e_count; ++ev) {
      BitWord z(n);
      scatter_bits(z, amp_msg, mv);
      scatter_bits(z, part.e, ev);
      for (std::size_t gi = 0; gi < part.a.size(); ++gi) {
        z.set(part.a[gi], part.g.get(gi));
      }
      layout.refresh_amp_frozen(z);
      const BitWord codeword = encode(z);
      for (std::uint64_t u_pat = 0; u_pat < (std::uint64_t(1) << n); ++u_pat) {
        for (std::uint64_t v_pat = 0; v_pat < (std::uint64_t(1) << n); ++v_pat) {
          const double pattern_weight = pauli_pattern_prob(pauli, n, u_pat, v_pat);
          if (pattern_weight == 0.0) continue;
          BitWord received = codeword;
          for (std::size_t i = 0; i < n; ++i) {
            if ((u_pat >> i) & 1) received.flip(i);
          }
          for (std::size_t i = 0; i < n; ++i) {
            symbols[i] = static_cast<std::uint8_t>(received.get(i));
          }
          for (std::size_t i = 0; i < n; ++i) {
            llr[i] = layout.amp_channel.llr(symbols[i]);
          }
          const BitWord z_hat = decoder.decode(llr, layout.amp_frozen);
          const bool amp_ok = z_hat == z;
          BitWord recovered_u = encode(z_hat);
          recovered_u.xor_with(received);

          for (const PhaseCase& pc : phase_cases) {
            layout.phase_frozen.values = pc.frozen_values;
            for (std::size_t i = 0; i < n; ++i) {
              const std::size_t src = n - 1 - i;
              const int w =
                  pc.codeword.get(src) ^ static_cast<int>((v_pat >> src) & 1);
              symbols[i] = static_cast<std::uint8_t>(w | (recovered_u.get(src) << 1));
            }
            for (std::size_t i = 0; i < n; ++i) {
              llr[i] = layout.phase_channel.llr(symbols[i]);
            }
            const BitWord x_hat_rev = decoder.decode(llr, layout.phase_frozen);
            const bool phase_ok = StageLayouts::reversed_equal(x_hat_rev, pc.input);
            if (!(amp_ok && phase_ok)) {
              fail += pattern_weight * assignment_weight;
            }
          }
        }
      }
    }
  }
  return fail;
}

}  // namespace qpolar
