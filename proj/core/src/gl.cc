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

#include "walshgl/gl.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "walshgl/errors.h"

namespace walshgl {

uint64_t tolerant_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return static_cast<uint64_t>(r);
  }
  return static_cast<uint64_t>(std::ceil(x));
}

uint64_t GLParams::count_threshold() const { return tolerant_ceil(s); }

void GLParams::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must satisfy 0 < eps <= 1, got " +
                                std::to_string(epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must satisfy 0 < delta < 1, got " +
                                std::to_string(delta));
  }
  if (l < 1) throw std::invalid_argument("sample count l must be >= 1");
  if (!(s > 0.0) || s > static_cast<double>(l)) {
    throw std::invalid_argument("count threshold s must satisfy 0 < s <= l");
  }
}

GLParams derive_params(double epsilon, double delta) {
  GLParams p;
  p.epsilon = epsilon;
  p.delta = delta;
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must satisfy 0 < eps <= 1, got " +
                                std::to_string(epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must satisfy 0 < delta < 1, got " +
                                std::to_string(delta));
  }
  const double eps2 = epsilon * epsilon;
  const double raw = 8.0 * -std::log(delta) / (eps2 * eps2);
  p.l = std::max<uint64_t>(1, tolerant_ceil(raw));
  p.s = eps2 * static_cast<double>(p.l) / 2.0;
  return p;
}

uint64_t strict_candidate_bound(double epsilon) {
  return std::max<uint64_t>(
      1, static_cast<uint64_t>(std::floor(4.0 / (epsilon * epsilon) + 1e-9)));
}

GLParams derive_params_strict(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must satisfy 0 < eps <= 1, got " +
                                std::to_string(epsilon));
  }
  return derive_params(epsilon,
                       delta / static_cast<double>(strict_candidate_bound(epsilon)));
}

bool HeavyList::contains(uint64_t a) const {
  return std::any_of(entries.begin(), entries.end(),
                     [a](const HeavyEntry& e) { return e.a == a && !e.b; });
}

bool HeavyList::contains(uint64_t a, uint32_t b) const {
  return std::any_of(entries.begin(), entries.end(), [a, b](const HeavyEntry& e) {
    return e.a == a && e.b && *e.b == b;
  });
}

namespace {

// One counting pass: `l` draws, a counter per outcome, keep outcomes whose
// counter reaches the threshold. Returns (outcome -> count) for the kept
// outcomes, ordered by outcome.
std::map<uint64_t, uint64_t> counting_pass(OutcomeSampler& sampler,
                                           SplitMix64& rng, uint64_t l,
                                           uint64_t threshold,
                                           uint64_t& queries) {
  std::unordered_map<uint64_t, uint64_t> counts;
  std::map<uint64_t, uint64_t> kept;
  for (uint64_t k = 0; k < l; ++k) {
    const uint64_t w = sampler.draw(rng);
    ++queries;
    const uint64_t c = ++counts[w];
    if (c >= threshold) kept[w] = c;
  }
  return kept;
}

}  // namespace

HeavyList run_algorithm1(OutcomeSampler& sampler, const GLParams& params,
                         uint64_t seed) {
  params.validate();
  HeavyList out;
  out.n = sampler.width();
  SplitMix64 rng(seed);
  auto kept = counting_pass(sampler, rng, params.l, params.count_threshold(),
                            out.queries);
  for (const auto& [a, count] : kept) {
    out.entries.push_back(HeavyEntry{a, std::nullopt, count, std::nullopt});
  }
  return out;
}

HeavyList run_algorithm1(const BooleanFunction& f, const GLParams& params,
                         uint64_t seed, SamplerMode mode) {
  auto sampler = make_dj_sampler(f, mode);
  return run_algorithm1(*sampler, params, seed);
}

HeavyList run_algorithm2(int n, int m, const ComponentSamplerFactory& factory,
                         const GLParams& params, uint64_t seed) {
  params.validate();
  if (m < 1 || m > kMaxOutputs) {
    throw CapacityError("output count m=" + std::to_string(m) +
                        " outside supported range [1, " +
                        std::to_string(kMaxOutputs) + "]");
  }
  HeavyList out;
  out.n = n;
  out.m = m;
  const uint64_t threshold = params.count_threshold();
  for (uint32_t b = 1; b < (uint32_t{1} << m); ++b) {
    auto sampler = factory(b);
    if (sampler->width() != n) {
      throw std::logic_error("component sampler has the wrong outcome width");
    }
    SplitMix64 rng(derive_seed(seed, b));
    auto kept = counting_pass(*sampler, rng, params.l, threshold, out.queries);
    for (const auto& [a, count] : kept) {
      out.entries.push_back(HeavyEntry{a, b, count, std::nullopt});
    }
  }
  return out;
}

HeavyList run_algorithm2(const VectorialFunction& F, const GLParams& params,
                         uint64_t seed, SamplerMode mode) {
  return run_algorithm2(
      F.num_inputs(), F.num_outputs(),
      [&F, mode](uint32_t b) { return make_qwt_sampler(F, b, mode); }, params,
      seed);
}

VerificationReport verify_against_oracle(const WalshSpectrum& spectrum,
                                         const HeavyList& result,
                                         const Threshold& eps) {
  VerificationReport report;
  const int n = spectrum.num_vars();
  const Threshold half = eps.half();
  for (uint64_t a : heavy_set_exact(spectrum, eps)) {
    if (!result.contains(a)) report.missing.push_back(HeavyKey{a, std::nullopt});
  }
  for (const HeavyEntry& e : result.entries) {
    if (e.b || e.a >= spectrum.size() || !half.admits(spectrum[e.a], n)) {
      report.unsound.push_back(e.key());
    }
  }
  report.complete = report.missing.empty();
  report.sound = report.unsound.empty();
  return report;
}

VerificationReport verify_against_oracle(const BooleanFunction& f,
                                         const HeavyList& result,
                                         const Threshold& eps) {
  return verify_against_oracle(fwht(f), result, eps);
}

VerificationReport verify_against_oracle(const std::vector<WalshSpectrum>& lat,
                                         const HeavyList& result,
                                         const Threshold& eps) {
  VerificationReport report;
  const Threshold half = eps.half();
  for (uint32_t b = 1; b < lat.size(); ++b) {
    for (uint64_t a : heavy_set_exact(lat[b], eps)) {
      if (!result.contains(a, b)) report.missing.push_back(HeavyKey{a, b});
    }
  }
  for (const HeavyEntry& e : result.entries) {
    const bool in_range = e.b && *e.b >= 1 && *e.b < lat.size() &&
                          e.a < lat[*e.b].size();
    if (!in_range ||
        !half.admits(lat[*e.b][e.a], lat[*e.b].num_vars())) {
      report.unsound.push_back(e.key());
    }
  }
  report.complete = report.missing.empty();
  report.sound = report.unsound.empty();
  return report;
}

VerificationReport verify_against_oracle(const VectorialFunction& F,
                                         const HeavyList& result,
                                         const Threshold& eps) {
  return verify_against_oracle(linear_approximation_table(F), result, eps);
}

void annotate_exact(HeavyList& result, const WalshSpectrum& spectrum) {
  for (HeavyEntry& e : result.entries) e.exact_s = spectrum.correlation(e.a);
}

void annotate_exact(HeavyList& result, const std::vector<WalshSpectrum>& lat) {
  for (HeavyEntry& e : result.entries) {
    if (e.b) e.exact_s = lat.at(*e.b).correlation(e.a);
  }
}

}  // namespace walshgl
