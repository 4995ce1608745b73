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

#include <map>
#include <string>

#include "qpolar/construction.hpp"
#include "qpolar/qsim.hpp"

namespace qpolar {

/// Resolved invocation parameters embedded verbatim under "config" in every
/// emitted JSON document, for provenance. Values are the flag strings as
/// resolved; parameters that cannot affect results (worker count, output
/// paths) are deliberately left out so reruns stay byte-identical.
using ConfigMap = std::map<std::string, std::string>;

/// Serializes a code description (schema "qpolar.code_spec.v1"): transform
/// size, channel, index partition with frozen words as hex, construction
/// metadata, and a summary block with set sizes and rates. Deterministic:
/// keys are emitted sorted and doubles use shortest round-trip form.
std::string code_spec_to_json(const CodeSpec& spec, const ConfigMap& config = {});

/// Parses code_spec_to_json output. Throws std::invalid_argument on schema
/// or validation errors.
CodeSpec code_spec_from_json(const std::string& text);

/// Serializes a simulation report (schema "qpolar.sim_report.v1") together
/// with the channel it measured.
std::string sim_report_to_json(const SimReport& report, const CodeSpec& spec,
                               const ConfigMap& config = {});

/// Header line (no trailing newline) for sweep CSV output.
std::string sweep_csv_header();

/// One CSV row (no trailing newline) matching sweep_csv_header: n,
/// channel_param, net_rate, ent_rate, amp_err, phase_err, block_err,
/// ci_halfwidth (block), trials, seed.
std::string sweep_csv_row(const CodeSpec& spec, const SimReport& report);

}  // namespace qpolar
