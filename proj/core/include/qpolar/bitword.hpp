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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qpolar {

/// Fixed-length binary word over F_2, packed 64 bits per machine word.
///
/// Bit i lives in words()[i / 64] at bit position i % 64. Pad bits above
/// size() are kept zero, so whole-word XOR and equality are valid.
///
/// Hex serialization: character t covers bits [4t, 4t + 4) with bit 4t in
/// the most significant position of the nibble, so "8" encodes the single
/// set bit 0 of a 4-bit word.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitWord zeros(std::size_t n) { return BitWord(n); }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  int get(std::size_t i) const {
    return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u);
  }

  void set(std::size_t i, int bit) {
    const std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (bit)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  /// Elementwise XOR with a word of the same length.
  void xor_with(const BitWord& other);

  /// New word with the index order reversed: out[i] = in[n - 1 - i].
  BitWord reversed() const;

  std::size_t popcount() const;

  bool operator==(const BitWord&) const = default;

  std::string to_hex() const;

  /// Parses a hex string produced by to_hex for a word of n bits. Throws
  /// std::invalid_argument on bad characters, wrong length, or nonzero pad
  /// bits.
  static BitWord from_hex(const std::string& hex, std::size_t n);

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qpolar
