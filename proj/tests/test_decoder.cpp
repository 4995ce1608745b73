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

#include "qpolar/decoder.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qpolar/rng.hpp"
#include "qpolar/transform.hpp"
#include "support/oracles.hpp"

namespace qpolar {
namespace {

using testing::posterior_reference_decode;
using testing::word_from_bits;
using testing::word_from_uint;

BitWord random_word(std::size_t n, Rng& rng) {
  BitWord out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, rng.bit());
  return out;
}

FrozenMap random_frozen(std::size_t n, Rng& rng) {
  FrozenMap frozen;
  std::vector<int> bits;
  for (std::size_t j = 0; j < n; ++j) {
    if (rng.uniform() < 1.0 / 3.0) {
      frozen.positions.push_back(static_cast<std::uint32_t>(j));
      bits.push_back(rng.bit());
    }
  }
  frozen.values = BitWord(frozen.positions.size());
  for (std::size_t i = 0; i < bits.size(); ++i) frozen.values.set(i, bits[i]);
  return frozen;
}

/// Compares every SC decision against the posterior reference for one
/// received word; returns the mismatch count. Comparison stops at the
/// reference's defined prefix: past it the conditioned posterior assigns
/// zero weight to both values and no decision rule is singled out.
int compare_with_reference(const BinaryInputChannel& ch, int k,
                           const std::vector<std::uint8_t>& symbols,
                           const FrozenMap& frozen, ScDecoder& decoder) {
  const std::vector<double> llr = llr_from_outputs(ch, symbols);
  const BitWord sc = decoder.decode(llr, frozen);
  const testing::ReferenceDecode ref =
      posterior_reference_decode(ch, symbols, frozen, k);
  int mismatches = 0;
  for (std::size_t j = 0; j < ref.defined_prefix; ++j) {
    if (sc.get(j) != ref.decisions[j]) ++mismatches;
  }
  return mismatches;
}

TEST_SUITE("decoder") {

TEST_CASE("llr mapping from received symbols") {
  const BinaryInputChannel bsc = make_bsc(0.1);
  const std::vector<std::uint8_t> bsc_symbols = {0, 1, 0};
  const std::vector<double> bsc_llr = llr_from_outputs(bsc, bsc_symbols);
  CHECK(bsc_llr[0] == doctest::Approx(2.1972245773362196).epsilon(1e-13));
  CHECK(bsc_llr[1] == doctest::Approx(-2.1972245773362196).epsilon(1e-13));

  const BinaryInputChannel bec = make_bec(0.5);
  const std::vector<std::uint8_t> bec_symbols = {2, 0, 1};
  const std::vector<double> bec_llr = llr_from_outputs(bec, bec_symbols);
  CHECK(bec_llr[0] == 0.0);
  CHECK(bec_llr[1] == kLlrClamp);
  CHECK(bec_llr[2] == -kLlrClamp);

  const BinaryInputChannel ext =
      induced_extended_phase(PauliChannel::depolarizing(0.1));
  const std::vector<std::uint8_t> ext_symbols = {0};
  CHECK(llr_from_outputs(ext, ext_symbols)[0] ==
        doctest::Approx(3.295836866004329).epsilon(1e-13));

  const std::vector<std::uint8_t> bad = {3};
  CHECK_THROWS_AS(llr_from_outputs(bsc, bad), std::invalid_argument);
}

TEST_CASE("frozen map validation") {
  FrozenMap frozen;
  frozen.positions = {1, 3};
  frozen.values = BitWord(2);
  CHECK_NOTHROW(frozen.validate(4));
  CHECK_THROWS_AS(frozen.validate(3), std::invalid_argument);
  frozen.positions = {3, 1};
  CHECK_THROWS_AS(frozen.validate(4), std::invalid_argument);
  frozen.positions = {1};
  CHECK_THROWS_AS(frozen.validate(4), std::invalid_argument);  // value length
}

TEST_CASE("two-bit decode with a frozen first input") {
  ScDecoder decoder(1);
  FrozenMap frozen;
  frozen.positions = {0};
  frozen.values = BitWord(1);
  const std::vector<double> llr = {0.0, kLlrClamp};
  const BitWord out = decoder.decode(llr, frozen);
  CHECK(out.get(0) == 0);
  // Combined LLR for the free input is positive, so it decodes to 0; the
  // four-input posterior enumeration agrees.
  CHECK(out.get(1) == 0);

  const BinaryInputChannel bec = make_bec(0.5);
  const std::vector<std::uint8_t> symbols = {2, 0};
  CHECK(compare_with_reference(bec, 1, symbols, frozen, decoder) == 0);
}

TEST_CASE("noiseless decoding is exact for any frozen map") {
  Rng rng(51);
  const BinaryInputChannel clean = make_bsc(0.0);
  for (int k : {1, 3, 5}) {
    const std::size_t n = std::size_t(1) << k;
    ScDecoder decoder(k);
    for (int rep = 0; rep < 20; ++rep) {
      const FrozenMap frozen = random_frozen(n, rng);
      BitWord z = random_word(n, rng);
      for (std::size_t s = 0; s < frozen.positions.size(); ++s) {
        z.set(frozen.positions[s], frozen.values.get(s));
      }
      const BitWord codeword = encode(z);
      std::vector<std::uint8_t> symbols(n);
      for (std::size_t i = 0; i < n; ++i) {
        symbols[i] = static_cast<std::uint8_t>(codeword.get(i));
      }
      const std::vector<double> llr = llr_from_outputs(clean, symbols);
      CHECK(decoder.decode(llr, frozen) == z);
    }
  }
}

TEST_CASE("frozen positions echo their values under arbitrary evidence") {
  Rng rng(53);
  ScDecoder decoder(4);
  for (int rep = 0; rep < 30; ++rep) {
    const FrozenMap frozen = random_frozen(16, rng);
    std::vector<double> llr(16);
    for (double& v : llr) v = (rng.uniform() - 0.5) * 2.0 * kLlrClamp;
    const BitWord out = decoder.decode(llr, frozen);
    for (std::size_t s = 0; s < frozen.positions.size(); ++s) {
      CHECK(out.get(frozen.positions[s]) == frozen.values.get(s));
    }
  }
}

TEST_CASE("sc decisions match the posterior reference on every BEC(0.5) output at n=4") {
  const BinaryInputChannel bec = make_bec(0.5);
  ScDecoder decoder(2);
  const FrozenMap no_frozen;
  std::vector<std::uint8_t> symbols(4);
  int total_mismatches = 0;
  for (int w = 0; w < 81; ++w) {
    int v = w;
    for (int i = 0; i < 4; ++i) {
      symbols[i] = static_cast<std::uint8_t>(v % 3);
      v /= 3;
    }
    total_mismatches += compare_with_reference(bec, 2, symbols, no_frozen, decoder);
  }
  CHECK(total_mismatches == 0);
}

TEST_CASE("sc decisions match the posterior reference on sampled outputs") {
  Rng rng(59);
  struct Setup {
    BinaryInputChannel ch;
    int k;
    int reps;
  };
  const Setup setups[] = {
      {make_bec(0.5), 3, 400},
      {make_bsc(0.1), 2, 500},
      {make_bsc(0.1), 3, 500},
      {induced_extended_phase(PauliChannel::depolarizing(0.1)), 3, 400},
  };
  for (const Setup& setup : setups) {
    const std::size_t n = std::size_t(1) << setup.k;
    ScDecoder decoder(setup.k);
    int total_mismatches = 0;
    for (int rep = 0; rep < setup.reps; ++rep) {
      const FrozenMap frozen =
          rep % 2 == 0 ? FrozenMap{} : random_frozen(n, rng);
      BitWord z = random_word(n, rng);
      for (std::size_t s = 0; s < frozen.positions.size(); ++s) {
        z.set(frozen.positions[s], frozen.values.get(s));
      }
      const BitWord codeword = encode(z);
      std::vector<std::uint8_t> symbols(n);
      for (std::size_t i = 0; i < n; ++i) {
        symbols[i] = static_cast<std::uint8_t>(setup.ch.sample(codeword.get(i), rng));
      }
      total_mismatches +=
          compare_with_reference(setup.ch, setup.k, symbols, frozen, decoder);
    }
    CHECK(total_mismatches == 0);
  }
}

TEST_CASE("operation count is exactly n log2 n") {
  Rng rng(61);
  for (int k : {1, 4, 8, 12}) {
    const std::size_t n = std::size_t(1) << k;
    ScDecoder decoder(k);
    std::vector<double> llr(n);
    for (double& v : llr) v = (rng.uniform() - 0.5) * 4.0;
    decoder.decode(llr, FrozenMap{});
    CHECK(decoder.op_count() == n * static_cast<std::size_t>(k));
  }
}

TEST_CASE("genie pass flags no failures on a noiseless channel") {
  Rng rng(67);
  const BinaryInputChannel clean = make_bsc(0.0);
  ScDecoder decoder(4);
  const BitWord z = random_word(16, rng);
  const BitWord codeword = encode(z);
  std::vector<std::uint8_t> symbols(16);
  for (std::size_t i = 0; i < 16; ++i) {
    symbols[i] = static_cast<std::uint8_t>(codeword.get(i));
  }
  const std::vector<double> llr = llr_from_outputs(clean, symbols);
  const ScDecoder::GenieResult result = decoder.genie_decode(llr, z, FrozenMap{});
  for (std::size_t j = 0; j < 16; ++j) {
    CHECK(result.mismatch[j] == 0);
    CHECK(result.ambiguous[j] == 0);
  }
}

TEST_CASE("genie pass on a fully noisy channel: every decision is ambiguous, "
          "mismatches hit half") {
  Rng rng(71);
  const BinaryInputChannel coin = make_bsc(0.5);
  const std::size_t n = 64;
  ScDecoder decoder(6);
  const int trials = 4000;
  std::vector<std::uint64_t> mismatch_total(n, 0);
  for (int t = 0; t < trials; ++t) {
    const BitWord z = random_word(n, rng);
    const BitWord codeword = encode(z);
    std::vector<std::uint8_t> symbols(n);
    for (std::size_t i = 0; i < n; ++i) {
      symbols[i] = static_cast<std::uint8_t>(coin.sample(codeword.get(i), rng));
    }
    const std::vector<double> llr = llr_from_outputs(coin, symbols);
    const ScDecoder::GenieResult result = decoder.genie_decode(llr, z, FrozenMap{});
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(result.ambiguous[j] == 1);  // all LLRs are exactly 0
      mismatch_total[j] += result.mismatch[j];
    }
  }
  // Decisions always take 0 on ties, truth is uniform: mismatch rate 1/2.
  double mean = 0.0;
  for (std::uint64_t c : mismatch_total) mean += static_cast<double>(c) / trials;
  mean /= static_cast<double>(n);
  CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("decoder workspace can be reused across calls") {
  Rng rng(73);
  ScDecoder decoder(5);
  const BinaryInputChannel ch = make_bsc(0.1);
  std::vector<std::uint8_t> symbols(32);
  const BitWord z = random_word(32, rng);
  const BitWord codeword = encode(z);
  for (std::size_t i = 0; i < 32; ++i) {
    symbols[i] = static_cast<std::uint8_t>(ch.sample(codeword.get(i), rng));
  }
  const std::vector<double> llr = llr_from_outputs(ch, symbols);
  const BitWord first = decoder.decode(llr, FrozenMap{});

  // An unrelated decode in between must not perturb the next result.
  std::vector<double> other(32, -1.0);
  decoder.decode(other, FrozenMap{});
  CHECK(decoder.decode(llr, FrozenMap{}) == first);
}

}  // TEST_SUITE

}  // namespace
}  // namespace qpolar
