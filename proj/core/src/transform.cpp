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

#include "qpolar/transform.hpp"

#include <cstdint>
#include <stdexcept>

namespace qpolar {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("block length must be a power of two, got " +
                                std::to_string(n));
  }
  int k = 0;
  while ((std::size_t(1) << k) < n) ++k;
  return k;
}

TransformSpec TransformSpec::from_block_length(std::size_t n) {
  TransformSpec spec;
  spec.k = log2_exact(n);
  spec.n = n;
  return spec;
}

TransformSpec TransformSpec::from_depth(int k) {
  if (k < 0 || k >= 63) {
    throw std::invalid_argument("transform depth out of range");
  }
  TransformSpec spec;
  spec.k = k;
  spec.n = std::size_t(1) << k;
  return spec;
}

namespace {

// Within-word halves for strides 1, 2, 4, 8, 16, 32.
constexpr std::uint64_t kStrideMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

}  // namespace

BitWord encode(BitWord z) {
  const int k = log2_exact(z.size());
  auto& w = z.words();
  for (int level = 0; level < k; ++level) {
    const std::size_t h = std::size_t(1) << level;
    if (h < 64) {
      const std::uint64_t mask = kStrideMask[level];
      for (auto& word : w) word ^= (word >> h) & mask;
    } else {
      const std::size_t half_words = h / 64;
      for (std::size_t base = 0; base < w.size(); base += 2 * half_words) {
        for (std::size_t j = 0; j < half_words; ++j) {
          w[base + j] ^= w[base + half_words + j];
        }
      }
    }
  }
  return z;
}

BitWord encode_transpose(BitWord x) {
  const int k = log2_exact(x.size());
  auto& w = x.words();
  for (int level = 0; level < k; ++level) {
    const std::size_t h = std::size_t(1) << level;
    if (h < 64) {
      const std::uint64_t mask = kStrideMask[level];
      for (auto& word : w) word ^= (word & mask) << h;
    } else {
      const std::size_t half_words = h / 64;
      for (std::size_t base = 0; base < w.size(); base += 2 * half_words) {
        for (std::size_t j = 0; j < half_words; ++j) {
          w[base + half_words + j] ^= w[base + j];
        }
      }
    }
  }
  return x;
}

std::size_t cnot_count(std::size_t n) {
  const int k = log2_exact(n);
  return (n / 2) * static_cast<std::size_t>(k);
}

}  // namespace qpolar
