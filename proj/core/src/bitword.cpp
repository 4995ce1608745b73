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

#include "qpolar/bitword.hpp"

#include <bit>
#include <stdexcept>

namespace qpolar {

void BitWord::xor_with(const BitWord& other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("BitWord::xor_with: length mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

BitWord BitWord::reversed() const {
  BitWord out(n_);
  for (std::size_t i = 0; i < n_; ++i) out.set(i, get(n_ - 1 - i));
  return out;
}

std::size_t BitWord::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

namespace {

char nibble_to_hex(unsigned v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

int hex_to_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string BitWord::to_hex() const {
  const std::size_t digits = (n_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t t = 0; t < digits; ++t) {
    unsigned v = 0;
    for (std::size_t r = 0; r < 4; ++r) {
      const std::size_t i = 4 * t + r;
      if (i < n_ && get(i)) v |= 1u << (3 - r);
    }
    out[t] = nibble_to_hex(v);
  }
  return out;
}

BitWord BitWord::from_hex(const std::string& hex, std::size_t n) {
  const std::size_t digits = (n + 3) / 4;
  if (hex.size() != digits) {
    throw std::invalid_argument("BitWord::from_hex: expected " +
                                std::to_string(digits) + " hex digits for " +
                                std::to_string(n) + " bits, got " +
                                std::to_string(hex.size()));
  }
  BitWord out(n);
  for (std::size_t t = 0; t < digits; ++t) {
    const int v = hex_to_nibble(hex[t]);
    if (v < 0) {
      throw std::invalid_argument("BitWord::from_hex: invalid hex character");
    }
    for (std::size_t r = 0; r < 4; ++r) {
      const std::size_t i = 4 * t + r;
      const int bit = (v >> (3 - r)) & 1;
      if (i < n) {
        out.set(i, bit);
      } else if (bit) {
        throw std::invalid_argument("BitWord::from_hex: nonzero pad bits");
      }
    }
  }
  return out;
}

}  // namespace qpolar
