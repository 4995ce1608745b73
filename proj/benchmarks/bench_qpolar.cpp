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
//
// Throughput benchmarks for the hot paths: the packed transform, the exact
// erasure recursion, successive cancellation decoding on erasure and flip
// LLR inputs, and full two-stage trials.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "qpolar/channels.hpp"
#include "qpolar/construction.hpp"
#include "qpolar/decoder.hpp"
#include "qpolar/qsim.hpp"
#include "qpolar/rng.hpp"
#include "qpolar/transform.hpp"

namespace {

qpolar::BitWord random_word(std::size_t n, qpolar::Rng& rng) {
  qpolar::BitWord word(n);
  for (std::size_t j = 0; j < n; ++j) word.set(j, rng.bit() != 0);
  return word;
}

void BM_Encode(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  qpolar::Rng rng(1);
  qpolar::BitWord word = random_word(n, rng);
  for (auto _ : state) {
    word = qpolar::encode(word);
    benchmark::DoNotOptimize(word);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Encode)->Arg(1024)->Arg(4096)->Arg(16384)->Arg(65536);

void BM_EncodeTranspose(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  qpolar::Rng rng(2);
  qpolar::BitWord word = random_word(n, rng);
  for (auto _ : state) {
    word = qpolar::encode_transpose(word);
    benchmark::DoNotOptimize(word);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_EncodeTranspose)->Arg(4096)->Arg(65536);

void BM_ErasureRecursion(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpolar::bec_reliability(0.25, n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ErasureRecursion)->Arg(1024)->Arg(16384)->Arg(262144);

void BM_DecodeErasure(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(qpolar::log2_exact(n));
  const qpolar::BinaryInputChannel ch = qpolar::make_bec(0.25);
  qpolar::Rng rng(3);
  const qpolar::BitWord x = qpolar::encode(random_word(n, rng));
  std::vector<std::uint8_t> symbols(n);
  for (std::size_t j = 0; j < n; ++j) {
    symbols[j] = static_cast<std::uint8_t>(ch.sample(x.get(j) ? 1 : 0, rng));
  }
  const std::vector<double> llr = qpolar::llr_from_outputs(ch, symbols);
  qpolar::ScDecoder decoder(k);
  const qpolar::FrozenMap frozen;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoder.decode(llr, frozen));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_DecodeErasure)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_DecodeFlip(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(qpolar::log2_exact(n));
  const qpolar::BinaryInputChannel ch = qpolar::make_bsc(0.05);
  qpolar::Rng rng(4);
  const qpolar::BitWord x = qpolar::encode(random_word(n, rng));
  std::vector<std::uint8_t> symbols(n);
  for (std::size_t j = 0; j < n; ++j) {
    symbols[j] = static_cast<std::uint8_t>(ch.sample(x.get(j) ? 1 : 0, rng));
  }
  const std::vector<double> llr = qpolar::llr_from_outputs(ch, symbols);
  qpolar::ScDecoder decoder(k);
  const qpolar::FrozenMap frozen;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoder.decode(llr, frozen));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_DecodeFlip)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_ErasureTrial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const qpolar::CodeSpec spec = qpolar::construct_code(
      qpolar::ChannelSpec::parse("erasure:p=0.25"), n, 1e-3, 1, 19);
  qpolar::TrialRunner runner(spec);
  qpolar::Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(runner.run_trial(rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ErasureTrial)->Arg(1024)->Arg(4096);

void BM_DepolarizingTrial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const qpolar::CodeSpec spec = qpolar::construct_code(
      qpolar::ChannelSpec::parse("depolarizing:q=0.05"), n, 1e-2, 2000, 7);
  qpolar::TrialRunner runner(spec);
  qpolar::Rng rng(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(runner.run_trial(rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_DepolarizingTrial)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
