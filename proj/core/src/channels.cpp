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

#include "qpolar/channels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qpolar {

namespace {

constexpr double kProbSumTol = 1e-12;

void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

// Evaluated as a difference of logs, not log(p0 / p1), so symbols with the
// same probability pair in opposite roles get exact bitwise negations of
// each other. Successive cancellation needs that: its variable nodes then
// cancel balanced evidence to an exact 0.0, which is what the zero-LLR tie
// rule keys on.
double clamped_llr(double p0, double p1) {
  if (p0 <= 0.0 && p1 <= 0.0) return 0.0;
  if (p1 <= 0.0) return kLlrClamp;
  if (p0 <= 0.0) return -kLlrClamp;
  if (p0 == p1) return 0.0;
  return std::clamp(std::log(p0) - std::log(p1), -kLlrClamp, kLlrClamp);
}

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

PauliChannel PauliChannel::depolarizing(double q) {
  check_unit_interval(q, "depolarizing strength");
  PauliChannel ch;
  ch.p00 = 1.0 - q;
  ch.p10 = q / 3.0;
  ch.p01 = q / 3.0;
  ch.p11 = q / 3.0;
  return ch;
}

PauliChannel PauliChannel::independent_xz(double delta_u, double delta_v) {
  check_unit_interval(delta_u, "X flip rate");
  check_unit_interval(delta_v, "Z flip rate");
  PauliChannel ch;
  ch.p00 = (1.0 - delta_u) * (1.0 - delta_v);
  ch.p10 = delta_u * (1.0 - delta_v);
  ch.p01 = (1.0 - delta_u) * delta_v;
  ch.p11 = delta_u * delta_v;
  return ch;
}

double PauliChannel::prob(int u, int v) const {
  if (u == 0) return v == 0 ? p00 : p01;
  return v == 0 ? p10 : p11;
}

void PauliChannel::validate() const {
  for (double p : {p00, p10, p01, p11}) check_unit_interval(p, "Pauli weight");
  const double sum = p00 + p10 + p01 + p11;
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw std::invalid_argument("Pauli weights must sum to 1, got " +
                                std::to_string(sum));
  }
}

BinaryInputChannel::BinaryInputChannel(ChannelKind kind,
                                       std::vector<std::array<double, 2>> table)
    : kind_(kind), table_(std::move(table)) {
  if (table_.empty()) {
    throw std::invalid_argument("channel table must be nonempty");
  }
  for (int x = 0; x < 2; ++x) {
    double sum = 0.0;
    for (const auto& row : table_) {
      if (!(row[x] >= 0.0 && row[x] <= 1.0)) {
        throw std::invalid_argument("channel probabilities must lie in [0, 1]");
      }
      sum += row[x];
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
      throw std::invalid_argument("channel rows must sum to 1 per input");
    }
  }
  llr_.reserve(table_.size());
  for (const auto& row : table_) llr_.push_back(clamped_llr(row[0], row[1]));
}

int BinaryInputChannel::sample(int input, Rng& rng) const {
  const double r = rng.uniform();
  double acc = 0.0;
  const int last = num_symbols() - 1;
  for (int y = 0; y < last; ++y) {
    acc += table_[y][input];
    if (r < acc) return y;
  }
  return last;
}

BinaryInputChannel make_bsc(double flip) {
  check_unit_interval(flip, "BSC flip rate");
  return BinaryInputChannel(ChannelKind::kBsc,
                            {{{1.0 - flip, flip}}, {{flip, 1.0 - flip}}});
}

BinaryInputChannel make_bec(double erasure) {
  check_unit_interval(erasure, "BEC erasure rate");
  const double keep = 1.0 - erasure;
  return BinaryInputChannel(ChannelKind::kBec,
                            {{{keep, 0.0}}, {{0.0, keep}}, {{erasure, erasure}}});
}

BinaryInputChannel induced_amplitude(const PauliChannel& ch) {
  ch.validate();
  return make_bsc(ch.x_flip_rate());
}

BinaryInputChannel induced_phase(const PauliChannel& ch) {
  ch.validate();
  return make_bsc(ch.z_flip_rate());
}

BinaryInputChannel induced_extended_phase(const PauliChannel& ch) {
  ch.validate();
  // Symbol (w, u) packed as w | u << 1; P((w, u) | x) = p[u][w xor x].
  std::vector<std::array<double, 2>> table(4);
  for (int u = 0; u < 2; ++u) {
    for (int w = 0; w < 2; ++w) {
      table[w | (u << 1)] = {ch.prob(u, w), ch.prob(u, w ^ 1)};
    }
  }
  return BinaryInputChannel(ChannelKind::kExtendedPhase, std::move(table));
}

double channel_fidelity(const BinaryInputChannel& ch) {
  double sum = 0.0;
  for (int y = 0; y < ch.num_symbols(); ++y) {
    sum += std::sqrt(ch.prob(y, 0) * ch.prob(y, 1));
  }
  return sum;
}

double symmetric_mutual_information(const BinaryInputChannel& ch) {
  double info = 0.0;
  for (int y = 0; y < ch.num_symbols(); ++y) {
    const double p0 = ch.prob(y, 0);
    const double p1 = ch.prob(y, 1);
    const double py = 0.5 * (p0 + p1);
    if (p0 > 0.0) info += 0.5 * p0 * std::log2(p0 / py);
    if (p1 > 0.0) info += 0.5 * p1 * std::log2(p1 / py);
  }
  return info;
}

double coherent_information(const PauliChannel& ch) {
  ch.validate();
  return 1.0 - entropy_term(ch.p00) - entropy_term(ch.p10) - entropy_term(ch.p01) -
         entropy_term(ch.p11);
}

ErrorPattern sample_error(const PauliChannel& ch, std::size_t n, Rng& rng) {
  ErrorPattern pattern{BitWord(n), BitWord(n)};
  const double c0 = ch.p00;
  const double c1 = c0 + ch.p10;
  const double c2 = c1 + ch.p01;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rng.uniform();
    if (r < c0) continue;
    if (r < c1) {
      pattern.u.set(i, 1);
    } else if (r < c2) {
      pattern.v.set(i, 1);
    } else {
      pattern.u.set(i, 1);
      pattern.v.set(i, 1);
    }
  }
  return pattern;
}

BitWord sample_erasure_mask(double p, std::size_t n, Rng& rng) {
  check_unit_interval(p, "erasure rate");
  BitWord mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.bernoulli(p)) mask.set(i, 1);
  }
  return mask;
}

namespace {

std::string format_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ParamList {
  std::vector<std::pair<std::string, double>> entries;

  double get(const std::string& key) const {
    for (const auto& [k, v] : entries) {
      if (k == key) return v;
    }
    throw std::invalid_argument("channel spec missing parameter '" + key + "'");
  }
};

ParamList parse_params(const std::string& text, std::size_t expected) {
  ParamList list;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw std::invalid_argument("channel parameter '" + item +
                                  "' is not of the form key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t consumed = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(value, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("channel parameter '" + key +
                                  "' has a non-numeric value");
    }
    if (consumed != value.size()) {
      throw std::invalid_argument("channel parameter '" + key +
                                  "' has trailing characters");
    }
    list.entries.emplace_back(key, parsed);
    pos = comma + 1;
  }
  if (list.entries.size() != expected) {
    throw std::invalid_argument("channel spec expects " + std::to_string(expected) +
                                " parameters, got " +
                                std::to_string(list.entries.size()));
  }
  return list;
}

}  // namespace

double ChannelSpec::scalar_param() const {
  switch (family) {
    case Family::kDepolarizing:
      return 1.0 - pauli.p00;
    case Family::kXz:
      return pauli.x_flip_rate();
    case Family::kPauli:
      return 1.0 - pauli.p00;
    case Family::kErasure:
      return erasure_p;
  }
  throw std::logic_error("unreachable");
}

double ChannelSpec::rate_target() const {
  if (is_erasure()) return 1.0 - 2.0 * erasure_p;
  return coherent_information(pauli);
}

ChannelSpec ChannelSpec::parse(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string family = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  ChannelSpec spec;
  if (family == "depolarizing") {
    spec.family = Family::kDepolarizing;
    spec.pauli = PauliChannel::depolarizing(parse_params(rest, 1).get("q"));
  } else if (family == "xz") {
    spec.family = Family::kXz;
    const ParamList params = parse_params(rest, 2);
    spec.pauli = PauliChannel::independent_xz(params.get("du"), params.get("dv"));
  } else if (family == "pauli") {
    spec.family = Family::kPauli;
    const ParamList params = parse_params(rest, 4);
    spec.pauli.p00 = params.get("p00");
    spec.pauli.p10 = params.get("p10");
    spec.pauli.p01 = params.get("p01");
    spec.pauli.p11 = params.get("p11");
    spec.pauli.validate();
  } else if (family == "erasure") {
    spec.family = Family::kErasure;
    spec.erasure_p = parse_params(rest, 1).get("p");
    check_unit_interval(spec.erasure_p, "erasure rate");
  } else {
    throw std::invalid_argument("unknown channel family '" + family + "'");
  }
  return spec;
}

std::string ChannelSpec::canonical() const {
  switch (family) {
    case Family::kDepolarizing:
      return "depolarizing:q=" + format_param(1.0 - pauli.p00);
    case Family::kXz:
      return "xz:du=" + format_param(pauli.x_flip_rate()) +
             ",dv=" + format_param(pauli.z_flip_rate());
    case Family::kPauli:
      return "pauli:p00=" + format_param(pauli.p00) +
             ",p10=" + format_param(pauli.p10) + ",p01=" + format_param(pauli.p01) +
             ",p11=" + format_param(pauli.p11);
    case Family::kErasure:
      return "erasure:p=" + format_param(erasure_p);
  }
  throw std::logic_error("unreachable");
}

}  // namespace qpolar
