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

#include "qpolar/json_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace qpolar {

namespace {

using nlohmann::json;

constexpr const char* kCodeSpecSchema = "qpolar.code_spec.v1";
constexpr const char* kSimReportSchema = "qpolar.sim_report.v1";

json channel_to_json(const ChannelSpec& channel) {
  json out;
  switch (channel.family) {
    case ChannelSpec::Family::kDepolarizing:
      out["family"] = "depolarizing";
      out["q"] = 1.0 - channel.pauli.p00;
      break;
    case ChannelSpec::Family::kXz:
      out["family"] = "xz";
      out["du"] = channel.pauli.x_flip_rate();
      out["dv"] = channel.pauli.z_flip_rate();
      break;
    case ChannelSpec::Family::kPauli:
      out["family"] = "pauli";
      out["p00"] = channel.pauli.p00;
      out["p10"] = channel.pauli.p10;
      out["p01"] = channel.pauli.p01;
      out["p11"] = channel.pauli.p11;
      break;
    case ChannelSpec::Family::kErasure:
      out["family"] = "erasure";
      out["p"] = channel.erasure_p;
      break;
  }
  return out;
}

ChannelSpec channel_from_json(const json& in) {
  const std::string family = in.at("family").get<std::string>();
  ChannelSpec channel;
  if (family == "depolarizing") {
    channel.family = ChannelSpec::Family::kDepolarizing;
    channel.pauli = PauliChannel::depolarizing(in.at("q").get<double>());
  } else if (family == "xz") {
    channel.family = ChannelSpec::Family::kXz;
    channel.pauli = PauliChannel::independent_xz(in.at("du").get<double>(),
                                                 in.at("dv").get<double>());
  } else if (family == "pauli") {
    channel.family = ChannelSpec::Family::kPauli;
    channel.pauli.p00 = in.at("p00").get<double>();
    channel.pauli.p10 = in.at("p10").get<double>();
    channel.pauli.p01 = in.at("p01").get<double>();
    channel.pauli.p11 = in.at("p11").get<double>();
    channel.pauli.validate();
  } else if (family == "erasure") {
    channel.family = ChannelSpec::Family::kErasure;
    channel.erasure_p = in.at("p").get<double>();
  } else {
    throw std::invalid_argument("unknown channel family '" + family + "'");
  }
  return channel;
}

json bitword_to_json(const BitWord& word) {
  return json{{"bits", word.size()}, {"hex", word.to_hex()}};
}

BitWord bitword_from_json(const json& in) {
  return BitWord::from_hex(in.at("hex").get<std::string>(),
                           in.at("bits").get<std::size_t>());
}

const char* metric_name(ReliabilityMetric metric) {
  return metric == ReliabilityMetric::kErasureProbability ? "erasure_probability"
                                                          : "error_rate";
}

ReliabilityMetric metric_from_name(const std::string& name) {
  if (name == "erasure_probability") return ReliabilityMetric::kErasureProbability;
  if (name == "error_rate") return ReliabilityMetric::kErrorRate;
  throw std::invalid_argument("unknown reliability metric '" + name + "'");
}

const char* method_name(MethodInfo::Kind kind) {
  switch (kind) {
    case MethodInfo::Kind::kExactBec:
      return "exact_bec";
    case MethodInfo::Kind::kMonteCarlo:
      return "monte_carlo";
    case MethodInfo::Kind::kFidelityBound:
      return "fidelity_bound";
  }
  throw std::logic_error("unreachable");
}

MethodInfo::Kind method_from_name(const std::string& name) {
  if (name == "exact_bec") return MethodInfo::Kind::kExactBec;
  if (name == "monte_carlo") return MethodInfo::Kind::kMonteCarlo;
  if (name == "fidelity_bound") return MethodInfo::Kind::kFidelityBound;
  throw std::invalid_argument("unknown construction method '" + name + "'");
}

json config_to_json(const ConfigMap& config) {
  json out = json::object();
  for (const auto& [key, value] : config) out[key] = value;
  return out;
}

std::vector<std::uint32_t> indices_from_json(const json& in) {
  return in.get<std::vector<std::uint32_t>>();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string code_spec_to_json(const CodeSpec& spec, const ConfigMap& config) {
  spec.validate();
  const IndexPartition& part = spec.partition;
  json out;
  out["format"] = kCodeSpecSchema;
  out["n"] = spec.transform.n;
  out["k"] = spec.transform.k;
  out["epsilon"] = spec.epsilon;
  out["channel"] = channel_to_json(spec.channel);
  out["metric"] = metric_name(spec.metric);
  out["method"] = json{{"kind", method_name(spec.method.kind)},
                       {"trials", spec.method.trials},
                       {"seed", spec.method.seed}};
  out["frozen_policy"] =
      spec.frozen_policy == FrozenPolicy::kAllZero ? "all_zero" : "random";
  out["q_indices"] = part.q;
  out["a_indices"] = part.a;
  out["p_indices"] = part.p;
  out["e_indices"] = part.e;
  out["g"] = bitword_to_json(part.g);
  out["h"] = bitword_to_json(part.h);
  out["summary"] = json{{"q_size", part.q.size()},
                        {"a_size", part.a.size()},
                        {"p_size", part.p.size()},
                        {"e_size", part.e.size()},
                        {"net_rate", net_rate(part)},
                        {"entanglement_rate", entanglement_rate(part)},
                        {"rate_target", spec.channel.rate_target()}};
  if (!config.empty()) out["config"] = config_to_json(config);
  return out.dump(2);
}

CodeSpec code_spec_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (in.at("format").get<std::string>() != kCodeSpecSchema) {
      throw std::invalid_argument("unexpected document format");
    }
    CodeSpec spec;
    spec.transform = TransformSpec::from_block_length(in.at("n").get<std::size_t>());
    if (in.at("k").get<int>() != spec.transform.k) {
      throw std::invalid_argument("n and k disagree");
    }
    spec.epsilon = in.at("epsilon").get<double>();
    spec.channel = channel_from_json(in.at("channel"));
    spec.metric = metric_from_name(in.at("metric").get<std::string>());
    const json& method = in.at("method");
    spec.method.kind = method_from_name(method.at("kind").get<std::string>());
    spec.method.trials = method.at("trials").get<std::uint64_t>();
    spec.method.seed = method.at("seed").get<std::uint64_t>();
    const std::string policy = in.at("frozen_policy").get<std::string>();
    if (policy == "all_zero") {
      spec.frozen_policy = FrozenPolicy::kAllZero;
    } else if (policy == "random") {
      spec.frozen_policy = FrozenPolicy::kRandom;
    } else {
      throw std::invalid_argument("unknown frozen policy '" + policy + "'");
    }
    spec.partition.n = spec.transform.n;
    spec.partition.q = indices_from_json(in.at("q_indices"));
    spec.partition.a = indices_from_json(in.at("a_indices"));
    spec.partition.p = indices_from_json(in.at("p_indices"));
    spec.partition.e = indices_from_json(in.at("e_indices"));
    spec.partition.g = bitword_from_json(in.at("g"));
    spec.partition.h = bitword_from_json(in.at("h"));
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed code description: ") +
                                e.what());
  }
}

std::string sim_report_to_json(const SimReport& report, const CodeSpec& spec,
                               const ConfigMap& config) {
  json out;
  out["format"] = kSimReportSchema;
  out["n"] = spec.transform.n;
  out["channel"] = channel_to_json(spec.channel);
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["amp_err"] = report.amp_err;
  out["phase_err"] = report.phase_err;
  out["block_err"] = report.block_err;
  out["amp_ci"] = report.amp_ci;
  out["phase_ci"] = report.phase_ci;
  out["block_ci"] = report.block_ci;
  out["amp_failures"] = report.amp_failures;
  out["phase_failures"] = report.phase_failures;
  out["block_failures"] = report.block_failures;
  out["net_rate"] = report.net_rate;
  out["entanglement_rate"] = report.entanglement_rate;
  if (!config.empty()) out["config"] = config_to_json(config);
  return out.dump(2);
}

std::string sweep_csv_header() {
  return "n,channel_param,net_rate,ent_rate,amp_err,phase_err,block_err,"
         "ci_halfwidth,trials,seed";
}

std::string sweep_csv_row(const CodeSpec& spec, const SimReport& report) {
  std::string row;
  row += std::to_string(spec.transform.n);
  row += ',';
  row += format_double(spec.channel.scalar_param());
  row += ',';
  row += format_double(report.net_rate);
  row += ',';
  row += format_double(report.entanglement_rate);
  row += ',';
  row += format_double(report.amp_err);
  row += ',';
  row += format_double(report.phase_err);
  row += ',';
  row += format_double(report.block_err);
  row += ',';
  row += format_double(report.block_ci);
  row += ',';
  row += std::to_string(report.trials);
  row += ',';
  row += std::to_string(report.seed);
  return row;
}

}  // namespace qpolar
