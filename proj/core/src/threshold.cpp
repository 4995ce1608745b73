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

#include "qpolar/threshold.hpp"

#include <cmath>
#include <stdexcept>

#include "qpolar/transform.hpp"

namespace qpolar {

double fprime_step(double f, int c) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::invalid_argument("fidelity must lie in [0, 1]");
  }
  if (c == 0) return f * f;
  if (c == 1) return 2 * f - f * f;
  throw std::invalid_argument("branch must be 0 or 1");
}

double assistance_margin(const PauliChannel& ch) {
  return channel_fidelity(induced_amplitude(ch)) +
         channel_fidelity(induced_extended_phase(ch)) - 1.0;
}

PauliChannel family_channel(NoiseFamily family, double t) {
  switch (family) {
    case NoiseFamily::kIndependentEqualXz:
      return PauliChannel::independent_xz(t, t);
    case NoiseFamily::kDepolarizing:
      return PauliChannel::depolarizing(t);
  }
  throw std::logic_error("unreachable");
}

double bisect(const std::function<double(double)>& fn, double lo, double hi,
              double tol) {
  if (!(lo < hi) || !(tol > 0.0)) {
    throw std::invalid_argument("bisect requires lo < hi and tol > 0");
  }
  double f_lo = fn(lo);
  double f_hi = fn(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw SolverError("bisect: no sign change over the bracket");
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200 && (hi - lo) * 0.5 > tol; ++iter) {
    mid = 0.5 * (lo + hi);
    const double f_mid = fn(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

double family_bracket_top(NoiseFamily family) {
  return family == NoiseFamily::kIndependentEqualXz ? 0.25 : 0.5;
}

}  // namespace

double solve_threshold(NoiseFamily family, double tol) {
  return bisect([family](double t) { return assistance_margin(family_channel(family, t)); },
                0.0, family_bracket_top(family), tol);
}

double solve_coherent_zero(NoiseFamily family, double tol) {
  return bisect(
      [family](double t) { return coherent_information(family_channel(family, t)); },
      0.0, family_bracket_top(family), tol);
}

std::vector<double> fprime_bound_profile(double f0, std::size_t n) {
  if (!(f0 >= 0.0 && f0 <= 1.0)) {
    throw std::invalid_argument("fidelity must lie in [0, 1]");
  }
  const int k = log2_exact(n);
  std::vector<double> values(n);
  values[0] = f0;
  std::size_t size = 1;
  // Index bit b picks printed branch c = 1 - b: the degrading (even) slot
  // doubles, the upgrading (odd) slot squares. The update order and float
  // expressions match bec_reliability exactly so erasure profiles agree
  // bit for bit.
  for (int level = 0; level < k; ++level) {
    for (std::size_t j = size; j-- > 0;) {
      const double f = values[j];
      values[2 * j] = 2 * f - f * f;
      values[2 * j + 1] = f * f;
    }
    size *= 2;
  }
  return values;
}

}  // namespace qpolar
