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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qpolar/bitword.hpp"
#include "qpolar/rng.hpp"

namespace qpolar {

/// Log-likelihood ratios are clamped to this magnitude everywhere, so
/// certainties stay finite through the decoder arithmetic.
inline constexpr double kLlrClamp = 40.0;

/// Qubit Pauli channel: applies X^u Z^v with probability p[u][v].
struct PauliChannel {
  double p00 = 1.0;  // identity
  double p10 = 0.0;  // X
  double p01 = 0.0;  // Z
  double p11 = 0.0;  // Y (X and Z together)

  static PauliChannel identity() { return {}; }
  static PauliChannel depolarizing(double q);
  static PauliChannel independent_xz(double delta_u, double delta_v);

  /// Probability of the component pair (u, v).
  double prob(int u, int v) const;

  /// Marginal bit-flip rate seen in the amplitude basis.
  double x_flip_rate() const { return p10 + p11; }

  /// Marginal flip rate seen in the phase basis.
  double z_flip_rate() const { return p01 + p11; }

  /// Throws std::invalid_argument unless all weights are in [0, 1] and sum
  /// to 1 within 1e-12.
  void validate() const;
};

enum class ChannelKind { kBsc, kBec, kExtendedPhase };

/// Binary-input discrete memoryless channel with a small integer output
/// alphabet, held as an explicit transition table P(y | x).
///
/// Symbol conventions: BSC outputs {0, 1}; BEC outputs {0, 1, 2} with 2 the
/// erasure; ExtendedPhase outputs the pair (w, u) packed as w | u << 1,
/// with P((w, u) | x) = p[u][w xor x] for the underlying Pauli weights.
class BinaryInputChannel {
 public:
  BinaryInputChannel(ChannelKind kind, std::vector<std::array<double, 2>> table);

  ChannelKind kind() const { return kind_; }
  int num_symbols() const { return static_cast<int>(table_.size()); }

  double prob(int symbol, int input) const { return table_[symbol][input]; }

  /// log(P(y|0) / P(y|1)) clamped to +-kLlrClamp; 0 for symbols with equal
  /// (including zero) likelihoods, so the BEC erasure maps to 0.
  double llr(int symbol) const { return llr_[symbol]; }

  int sample(int input, Rng& rng) const;

 private:
  ChannelKind kind_;
  std::vector<std::array<double, 2>> table_;
  std::vector<double> llr_;
};

BinaryInputChannel make_bsc(double flip);
BinaryInputChannel make_bec(double erasure);

/// Channel of the amplitude decoding stage: BSC with the Pauli X marginal.
BinaryInputChannel induced_amplitude(const PauliChannel& ch);

/// Channel of the phase basis alone: BSC with the Pauli Z marginal.
BinaryInputChannel induced_phase(const PauliChannel& ch);

/// Channel of the phase decoding stage once the diagnosed amplitude error is
/// available as side information: x maps to the pair (x xor v, u) with
/// probability p[u][v].
BinaryInputChannel induced_extended_phase(const PauliChannel& ch);

/// Channel fidelity sum_y sqrt(P(y|0) P(y|1)). Equals 2 sqrt(d (1 - d)) for
/// a BSC with flip rate d, the erasure rate for a BEC, and
/// 2 sum_u sqrt(p[u][0] p[u][1]) for an ExtendedPhase channel.
double channel_fidelity(const BinaryInputChannel& ch);

/// Mutual information of the channel under a uniform input bit, in bits.
double symmetric_mutual_information(const BinaryInputChannel& ch);

/// 1 - H(p) in bits, the hashing-bound rate of the Pauli channel. Equals
/// symmetric_mutual_information(amplitude) +
/// symmetric_mutual_information(extended_phase) - 1.
double coherent_information(const PauliChannel& ch);

struct ErrorPattern {
  BitWord u;
  BitWord v;
};

/// n independent draws of (u, v) component pairs.
ErrorPattern sample_error(const PauliChannel& ch, std::size_t n, Rng& rng);

/// n independent erasure indicators with rate p.
BitWord sample_erasure_mask(double p, std::size_t n, Rng& rng);

/// Parsed form of the CLI channel argument. Accepted shapes:
///   "depolarizing:q=0.1"
///   "xz:du=0.05,dv=0.05"
///   "pauli:p00=0.85,p10=0.05,p01=0.05,p11=0.05"
///   "erasure:p=0.25"
struct ChannelSpec {
  enum class Family { kDepolarizing, kXz, kPauli, kErasure };

  Family family = Family::kDepolarizing;
  PauliChannel pauli;   // meaningful unless family == kErasure
  double erasure_p = 0.0;

  bool is_erasure() const { return family == Family::kErasure; }

  /// The one-dimensional noise parameter used as the sweep axis: q for
  /// depolarizing, du for xz, 1 - p00 for pauli, p for erasure.
  double scalar_param() const;

  /// Hashing-bound rate target: coherent information for Pauli families,
  /// 1 - 2p for erasure.
  double rate_target() const;

  static ChannelSpec parse(const std::string& text);
  std::string canonical() const;
};

}  // namespace qpolar
