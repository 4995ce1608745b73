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
#include <functional>
#include <stdexcept>
#include <vector>

#include "qpolar/channels.hpp"

namespace qpolar {

/// One level of the tractable fidelity-bound recursion: branch c = 0 squares
/// (F -> F^2) and branch c = 1 doubles (F -> 2F - F^2). In the index
/// convention of encode(), index bit b selects branch c = 1 - b, so the
/// degrading half of the block doubles and the upgrading half squares; the
/// erasure channel, where the bound is exact, pins this mapping against
/// bec_reliability. Throws std::invalid_argument for f outside [0, 1] or
/// c outside {0, 1}.
double fprime_step(double f, int c);

/// F_A + F_P' - 1 for the fully degraded (single-level, worst) synthesized
/// pair: fidelity of the induced amplitude BSC plus fidelity of the extended
/// phase channel, minus one. Strictly negative means the
/// unreliable-in-both-stages index fraction vanishes asymptotically, so the
/// construction needs no preshared entanglement in the limit.
double assistance_margin(const PauliChannel& ch);

enum class NoiseFamily { kIndependentEqualXz, kDepolarizing };

/// The one-parameter channel family swept by the root finders: independent
/// equal X/Z flips at rate t, or depolarizing noise of strength t.
PauliChannel family_channel(NoiseFamily family, double t);

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bisection root of fn on [lo, hi]. Requires a sign change over the
/// bracket (SolverError otherwise); returns a point within tol of the
/// crossing, with a 200-iteration safety cap.
double bisect(const std::function<double(double)>& fn, double lo, double hi,
              double tol);

/// Noise strength at which assistance_margin crosses zero:
/// (2 - sqrt(3)) / 4 for the independent family, about 0.1205 for
/// depolarizing.
double solve_threshold(NoiseFamily family, double tol);

/// Noise strength at which coherent_information crosses zero: about 0.1100
/// for the independent family, about 0.1893 for depolarizing.
double solve_coherent_zero(NoiseFamily family, double tol);

/// Per-index fidelity upper bounds after log2(n) levels of fprime_step from
/// the base fidelity f0, in the index convention of encode(). Exact (and
/// bitwise identical to bec_reliability) for erasure channels. O(n).
std::vector<double> fprime_bound_profile(double f0, std::size_t n);

}  // namespace qpolar
