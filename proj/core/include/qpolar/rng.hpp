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

namespace qpolar {

/// Deterministic splittable random stream: xoshiro256** seeded through a
/// splitmix64 expansion of a 64-bit seed.
///
/// Every stochastic routine in this library takes a stream (or a seed)
/// explicitly; nothing reads global randomness. Child streams are keyed by
/// (seed, index), so deriving one stream per Monte Carlo trial makes results
/// independent of scheduling and worker count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) w = splitmix64_next(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  int bit() { return static_cast<int>(next_u64() >> 63); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Independent stream keyed by (seed, index). Chaining child calls keeps
  /// re-hashing the derived seeds, so nested derivations stay distinct.
  Rng child(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (index + 0x632be59bd9b4e019ULL));
    return splitmix64_next(x);
  }

 private:
  static std::uint64_t splitmix64_next(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t v, int s) {
    return (v << s) | (v >> (64 - s));
  }

  std::uint64_t seed_ = 0;
  std::uint64_t s_[4] = {};
};

}  // namespace qpolar
