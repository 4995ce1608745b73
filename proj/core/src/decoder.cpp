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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpolar/transform.hpp"

namespace qpolar {

void FrozenMap::validate(std::size_t n) const {
  if (values.size() != positions.size()) {
    throw std::invalid_argument("FrozenMap: one value bit per position required");
  }
  std::uint32_t prev = 0;
  bool first = true;
  for (std::uint32_t pos : positions) {
    if (pos >= n) {
      throw std::invalid_argument("FrozenMap: position out of range");
    }
    if (!first && pos <= prev) {
      throw std::invalid_argument("FrozenMap: positions must be strictly increasing");
    }
    prev = pos;
    first = false;
  }
}

std::vector<double> llr_from_outputs(const BinaryInputChannel& ch,
                                     std::span<const std::uint8_t> symbols) {
  const int alphabet = ch.num_symbols();
  std::vector<double> llr(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] >= alphabet) {
      throw std::invalid_argument("symbol out of range for channel alphabet");
    }
    llr[i] = ch.llr(symbols[i]);
  }
  return llr;
}

namespace {

// Exact check-node value with shortcuts that fire only where the closed
// form is reproduced bit for bit: a zero input forces 0, and two inputs at
// or beyond the clamp saturate (tanh(x/2) rounds to +-1.0 there, so the
// closed form hits the clamp too). Erasure-channel decoding stays entirely
// on these paths and performs no transcendental calls.
double check_node(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double mag_a = std::fabs(a);
  const double mag_b = std::fabs(b);
  const double sign = ((a < 0.0) != (b < 0.0)) ? -1.0 : 1.0;
  if (mag_a >= kLlrClamp && mag_b >= kLlrClamp) return sign * kLlrClamp;
  const double t = std::tanh(0.5 * a) * std::tanh(0.5 * b);
  return std::clamp(2.0 * std::atanh(t), -kLlrClamp, kLlrClamp);
}

double variable_node(double a, double b, std::uint8_t partial_sum) {
  return partial_sum ? b - a : b + a;
}

}  // namespace

ScDecoder::ScDecoder(int k) : k_(k), n_(TransformSpec::from_depth(k).n) {
  llr_scratch_.resize(k_ + 1);
  bit_scratch_.resize(k_ + 1);
  for (int level = 1; level <= k_; ++level) {
    llr_scratch_[level].resize(n_ >> level);
    bit_scratch_[level].resize(n_ >> level);
  }
  frozen_dense_.resize(n_);
  decisions_.resize(n_);
  root_.resize(n_);
}

void ScDecoder::run(std::span<const double> llr, const FrozenMap& frozen) {
  if (llr.size() != n_) {
    throw std::invalid_argument("LLR length must equal the block length");
  }
  frozen.validate(n_);
  std::fill(frozen_dense_.begin(), frozen_dense_.end(), std::int8_t(-1));
  for (std::size_t i = 0; i < frozen.positions.size(); ++i) {
    frozen_dense_[frozen.positions[i]] = static_cast<std::int8_t>(frozen.values.get(i));
  }
  next_leaf_ = 0;
  op_count_ = 0;
  decode_segment(0, llr.data(), root_.data());
}

void ScDecoder::decode_segment(int level, const double* llr, std::uint8_t* codeword) {
  const std::size_t m = n_ >> level;
  if (m == 1) {
    const std::size_t j = next_leaf_++;
    const std::int8_t fz = frozen_dense_[j];
    std::uint8_t d;
    if (fz >= 0) {
      d = static_cast<std::uint8_t>(fz);
    } else {
      const double value = llr[0];
      d = value < 0.0 ? 1 : 0;
      if (genie_mode_) {
        const std::uint8_t truth_bit = static_cast<std::uint8_t>(truth_->get(j));
        genie_result_.ambiguous[j] = value == 0.0 ? 1 : 0;
        genie_result_.mismatch[j] = d != truth_bit ? 1 : 0;
        d = truth_bit;
      }
    }
    decisions_[j] = d;
    codeword[0] = d;
    return;
  }
  const std::size_t half = m / 2;
  double* child_llr = llr_scratch_[level + 1].data();
  std::uint8_t* child_bits = bit_scratch_[level + 1].data();
  for (std::size_t i = 0; i < half; ++i) {
    child_llr[i] = check_node(llr[i], llr[i + half]);
  }
  op_count_ += half;
  decode_segment(level + 1, child_llr, child_bits);
  std::copy(child_bits, child_bits + half, codeword);
  for (std::size_t i = 0; i < half; ++i) {
    child_llr[i] = variable_node(llr[i], llr[i + half], codeword[i]);
  }
  op_count_ += half;
  decode_segment(level + 1, child_llr, child_bits);
  for (std::size_t i = 0; i < half; ++i) {
    codeword[i] ^= child_bits[i];
    codeword[i + half] = child_bits[i];
  }
}

BitWord ScDecoder::decode(std::span<const double> llr, const FrozenMap& frozen) {
  genie_mode_ = false;
  run(llr, frozen);
  BitWord out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (decisions_[j]) out.set(j, 1);
  }
  return out;
}

ScDecoder::GenieResult ScDecoder::genie_decode(std::span<const double> llr,
                                               const BitWord& truth,
                                               const FrozenMap& frozen) {
  if (truth.size() != n_) {
    throw std::invalid_argument("truth length must equal the block length");
  }
  genie_mode_ = true;
  truth_ = &truth;
  genie_result_.mismatch.assign(n_, 0);
  genie_result_.ambiguous.assign(n_, 0);
  run(llr, frozen);
  genie_mode_ = false;
  truth_ = nullptr;
  return std::move(genie_result_);
}

}  // namespace qpolar
