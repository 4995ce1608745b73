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

#include "qpolar/bitword.hpp"

namespace qpolar {

bool is_power_of_two(std::size_t n);

/// log2 of a power of two; throws std::invalid_argument otherwise.
int log2_exact(std::size_t n);

/// Block-length bookkeeping for the recursive 2x2 transform: n == 2^k.
struct TransformSpec {
  int k = 0;
  std::size_t n = 1;

  static TransformSpec from_block_length(std::size_t n);
  static TransformSpec from_depth(int k);
};

/// y = G_k z over F_2, where G_k is the k-fold Kronecker power of
/// G = ((1, 1), (0, 1)) acting on columns, computed in place by the XOR
/// butterfly in O(n log n) bit operations on packed words.
///
/// Index convention, fixed here for the whole library: input index j
/// (0-based) names the synthesized channel whose branch string is the
/// binary expansion of j, most significant bit first, with bit 0 the
/// degrading branch and bit 1 the upgrading branch. Channel outputs use the
/// natural order 0..n-1; there is no bit-reversal permutation anywhere in
/// this codebase. G_k is an involution, so encode is also the inverse
/// transform.
BitWord encode(BitWord z);

/// y = G_k^T x, the same butterfly mirrored, as seen by the conjugate
/// basis. Equal to reverse . encode . reverse.
BitWord encode_transpose(BitWord x);

/// Number of 2-input XOR gates in the butterfly network: (n/2) * log2(n).
std::size_t cnot_count(std::size_t n);

}  // namespace qpolar
