// Copyright 2026 The walshgl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WALSHGL_STATS_H_
#define WALSHGL_STATS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walshgl/gl.h"
#include "walshgl/sampler.h"
#include "walshgl/threshold.h"
#include "walshgl/walsh.h"

namespace walshgl {

// Per-candidate failure bound exp(-2 l (eps^2/4)^2) = exp(-l eps^4 / 8).
double hoeffding_failure_bound(uint64_t l, double eps);

// Largest empirical failure rate accepted over `runs` trials when the true
// rate is at most delta: delta + 3 sqrt(delta (1 - delta) / runs).
double binomial_acceptance_bound(double delta, uint64_t runs);

struct ProportionInterval {
  double lower = 0.0;
  double upper = 1.0;
};

// Wilson score interval, 95% by default.
ProportionInterval wilson_interval(uint64_t successes, uint64_t trials,
                                   double z = 1.959963984540054);

// Total-variation distance between normalized counts and P(w) = S(w)^2.
double distribution_distance(const std::map<uint64_t, uint64_t>& counts,
                             const WalshSpectrum& exact);

struct ChiSquareResult {
  double statistic = 0.0;
  uint64_t degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Pearson goodness of fit of `counts` (indexed by outcome) against
// `probabilities`. Zero-probability outcomes must have zero counts (otherwise
// p_value = 0) and do not contribute degrees of freedom.
ChiSquareResult chi_square_goodness_of_fit(std::span<const uint64_t> counts,
                                           std::span<const double> probabilities);

struct RunOutcome {
  uint64_t seed = 0;
  bool completeness_ok = true;  // designated heavy coefficient was listed
  bool soundness_ok = true;     // every listed coefficient has |S| >= eps/2
  bool all_heavy_found = true;  // every heavy coefficient was listed
  uint64_t list_size = 0;
};

struct MonteCarloOptions {
  SamplerMode mode = SamplerMode::kSpectral;
  bool strict_confidence = false;
  // Heavy coefficient whose inclusion is tracked. Defaults to the largest
  // |W| (smallest index on ties) if it is heavy at level eps.
  std::optional<HeavyKey> designated;
  // Multiplies the count threshold s. 1 in normal use; other values exist to
  // exercise the harness's own failure detection.
  double threshold_scale = 1.0;
  std::string fixture = "unnamed";
};

struct TrialReport {
  std::string fixture;
  Threshold epsilon = Threshold::from_double(1.0);
  double delta = 0.5;  // as requested (before any strict division)
  GLParams params;
  bool strict_confidence = false;
  SamplerMode mode = SamplerMode::kSpectral;
  uint64_t runs = 0;
  uint64_t base_seed = 0;

  std::optional<HeavyKey> designated;  // empty: completeness is vacuous
  std::vector<RunOutcome> outcomes;

  uint64_t completeness_failures = 0;
  uint64_t soundness_failures = 0;
  uint64_t simultaneous_failures = 0;  // reported, not gated
  double completeness_failure_rate = 0.0;
  double soundness_failure_rate = 0.0;
  double simultaneous_failure_rate = 0.0;
  ProportionInterval completeness_interval;
  ProportionInterval soundness_interval;

  double gate_bound = 0.0;
  bool completeness_gate = true;
  bool soundness_gate = true;

  bool completeness_vacuous() const { return !designated.has_value(); }
  bool passed() const { return completeness_gate && soundness_gate; }
};

inline constexpr uint64_t kMinMonteCarloRuns = 100;

// `runs` independent single-output searches (run r seeded with
// derive_seed(base_seed, r)), each checked against the exact spectrum.
TrialReport monte_carlo_theorem1(const BooleanFunction& f, const Threshold& eps,
                                 double delta, uint64_t runs,
                                 uint64_t base_seed,
                                 const MonteCarloOptions& options = {});

// Multi-output analogue; the designated coefficient is an (a, b) pair.
TrialReport monte_carlo_theorem2(const VectorialFunction& F,
                                 const Threshold& eps, double delta,
                                 uint64_t runs, uint64_t base_seed,
                                 const MonteCarloOptions& options = {});

}  // namespace walshgl

#endif  // WALSHGL_STATS_H_
