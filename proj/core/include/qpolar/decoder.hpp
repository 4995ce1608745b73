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
#include <span>
#include <vector>

#include "qpolar/bitword.hpp"
#include "qpolar/channels.hpp"

namespace qpolar {

/// Frozen inputs for one decoding pass: sorted 0-based positions plus one
/// value bit per position, in position order.
struct FrozenMap {
  std::vector<std::uint32_t> positions;
  BitWord values;

  /// Throws std::invalid_argument on unsorted/duplicate/out-of-range
  /// positions or a value length mismatch.
  void validate(std::size_t n) const;
};

/// Per-position log(P(y|0) / P(y|1)) for a received symbol word, read from
/// the channel's precomputed clamped table.
std::vector<double> llr_from_outputs(const BinaryInputChannel& ch,
                                     std::span<const std::uint8_t> symbols);

/// Successive-cancellation decoder over the natural index order 0..n-1.
///
/// Check nodes evaluate 2 atanh(tanh(a/2) tanh(b/2)) clamped to
/// +-kLlrClamp; variable nodes add or subtract according to the partial
/// sum. A decision at LLR exactly 0 takes the value 0. One instance owns
/// reusable workspace and is not thread safe; use one per worker.
class ScDecoder {
 public:
  explicit ScDecoder(int k);

  std::size_t block_length() const { return n_; }

  /// Full input-word estimate. Frozen positions echo their given values.
  BitWord decode(std::span<const double> llr, const FrozenMap& frozen);

  struct GenieResult {
    /// decision != truth at a free position, under the 0-tie rule.
    std::vector<std::uint8_t> mismatch;
    /// decision LLR was exactly 0 at a free position.
    std::vector<std::uint8_t> ambiguous;
  };

  /// SC pass in which each free decision is scored against the true input
  /// word and then replaced by the true bit before decoding continues, so
  /// every index sees correctly resolved predecessors.
  GenieResult genie_decode(std::span<const double> llr, const BitWord& truth,
                           const FrozenMap& frozen);

  /// Check-node plus variable-node evaluations in the most recent pass;
  /// equals n log2(n) for every full decode.
  std::uint64_t op_count() const { return op_count_; }

 private:
  void run(std::span<const double> llr, const FrozenMap& frozen);
  void decode_segment(int level, const double* llr, std::uint8_t* codeword);

  int k_ = 0;
  std::size_t n_ = 1;
  std::vector<std::vector<double>> llr_scratch_;
  std::vector<std::vector<std::uint8_t>> bit_scratch_;
  std::vector<std::int8_t> frozen_dense_;
  std::vector<std::uint8_t> decisions_;
  std::vector<std::uint8_t> root_;
  std::size_t next_leaf_ = 0;
  std::uint64_t op_count_ = 0;

  bool genie_mode_ = false;
  const BitWord* truth_ = nullptr;
  GenieResult genie_result_;
};

}  // namespace qpolar
