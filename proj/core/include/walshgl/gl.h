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

#ifndef WALSHGL_GL_H_
#define WALSHGL_GL_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "walshgl/boolean_function.h"
#include "walshgl/sampler.h"
#include "walshgl/threshold.h"
#include "walshgl/walsh.h"

namespace walshgl {

// Sampling parameters of the heavy-coefficient search.
//
//   l = ceil(8 ln(1/delta) / eps^4)   draws per run (per component b)
//   s = eps^2 l / 2                   count threshold, applied as count >= ceil(s)
//
// The logarithm is natural: Hoeffding's bound exp(-2 l (eps^2/4)^2) <= delta
// is what fixes l, and that bound is in base e.
struct GLParams {
  double epsilon = 1.0;
  double delta = 0.5;
  uint64_t l = 1;
  double s = 0.5;

  // ceil(s); values within 1e-9 (relative) of an integer are not bumped up
  // by floating-point noise.
  uint64_t count_threshold() const;
  // Throws std::invalid_argument unless eps in (0,1], delta in (0,1),
  // l >= 1 and 0 < s <= l.
  void validate() const;
};

GLParams derive_params(double epsilon, double delta);

// Union-bound variant: delta is divided by floor(4/eps^2), the Parseval bound
// on the number of candidates with |S| >= eps/2, so the guarantee holds for
// all of them at once. The returned params carry the divided delta.
GLParams derive_params_strict(double epsilon, double delta);
uint64_t strict_candidate_bound(double epsilon);

// Ceiling that ignores floating-point noise within 1e-9 (relative) of an
// integer.
uint64_t tolerant_ceil(double x);

struct HeavyKey {
  uint64_t a = 0;
  std::optional<uint32_t> b;

  friend bool operator==(const HeavyKey&, const HeavyKey&) = default;
};

struct HeavyEntry {
  uint64_t a = 0;
  std::optional<uint32_t> b;  // set for multi-output searches
  uint64_t count = 0;
  std::optional<double> exact_s;

  HeavyKey key() const { return HeavyKey{a, b}; }
};

// Output of a search. Entries are unique per a (per (a, b) for multi-output
// functions) and sorted by (b, a).
struct HeavyList {
  int n = 0;
  int m = 0;  // 0 for single-output searches
  std::vector<HeavyEntry> entries;
  uint64_t queries = 0;

  bool contains(uint64_t a) const;
  bool contains(uint64_t a, uint32_t b) const;
};

// Single-output search: l measurements of the Deutsch-Jozsa circuit, one
// counter per observed outcome, keep outcomes whose count reaches ceil(s).
// Draws come from SplitMix64(seed).
HeavyList run_algorithm1(const BooleanFunction& f, const GLParams& params,
                         uint64_t seed, SamplerMode mode);
HeavyList run_algorithm1(OutcomeSampler& sampler, const GLParams& params,
                         uint64_t seed);

// Per-component sampler factory for the multi-output search.
using ComponentSamplerFactory =
    std::function<std::unique_ptr<OutcomeSampler>(uint32_t b)>;

// Multi-output search: for every b in [1, 2^m - 1], an independent l-draw
// counting loop over the quantum Walsh transform of b.F, with counters keyed
// by (a, b) and reset per b. Component b draws from
// SplitMix64(derive_seed(seed, b)).
HeavyList run_algorithm2(const VectorialFunction& F, const GLParams& params,
                         uint64_t seed, SamplerMode mode);
HeavyList run_algorithm2(int n, int m, const ComponentSamplerFactory& factory,
                         const GLParams& params, uint64_t seed);

// Checks a result against the exact spectrum:
//   complete: every a with |S(a)| >= eps is listed,
//   sound:    every listed a has |S(a)| >= eps/2.
struct VerificationReport {
  bool complete = true;
  bool sound = true;
  std::vector<HeavyKey> missing;  // heavy but not listed
  std::vector<HeavyKey> unsound;  // listed but below eps/2

  bool ok() const { return complete && sound; }
};

VerificationReport verify_against_oracle(const WalshSpectrum& spectrum,
                                         const HeavyList& result,
                                         const Threshold& eps);
VerificationReport verify_against_oracle(const BooleanFunction& f,
                                         const HeavyList& result,
                                         const Threshold& eps);
// `lat` as returned by linear_approximation_table; b = 0 is never a target.
VerificationReport verify_against_oracle(const std::vector<WalshSpectrum>& lat,
                                         const HeavyList& result,
                                         const Threshold& eps);
VerificationReport verify_against_oracle(const VectorialFunction& F,
                                         const HeavyList& result,
                                         const Threshold& eps);

// Fills exact_s on every entry.
void annotate_exact(HeavyList& result, const WalshSpectrum& spectrum);
void annotate_exact(HeavyList& result, const std::vector<WalshSpectrum>& lat);

}  // namespace walshgl

#endif  // WALSHGL_GL_H_
