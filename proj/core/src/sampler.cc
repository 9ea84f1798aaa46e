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

#include "walshgl/sampler.h"

#include <algorithm>
#include <stdexcept>

#include "walshgl/errors.h"

namespace walshgl {

SamplerMode parse_sampler_mode(std::string_view name) {
  if (name == "spectral") return SamplerMode::kSpectral;
  if (name == "statevector" || name == "state_vector") {
    return SamplerMode::kStateVector;
  }
  throw ParseError("unknown sampler mode '" + std::string(name) +
                   "' (expected spectral or statevector)");
}

std::string to_string(SamplerMode mode) {
  return mode == SamplerMode::kSpectral ? "spectral" : "statevector";
}

SpectralSampler::SpectralSampler(const WalshSpectrum& spectrum)
    : n_(spectrum.num_vars()), cumulative_(spectrum.size()) {
  uint64_t running = 0;
  for (uint64_t a = 0; a < spectrum.size(); ++a) {
    running += static_cast<uint64_t>(spectrum[a] * spectrum[a]);
    cumulative_[a] = running;
  }
  if (running != uint64_t{1} << (2 * n_)) {
    throw std::logic_error("spectrum violates Parseval; not a Boolean function");
  }
}

uint64_t SpectralSampler::draw(SplitMix64& rng) {
  const uint64_t r = rng.below(cumulative_.back());
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  return static_cast<uint64_t>(it - cumulative_.begin());
}

StateVectorSampler::StateVectorSampler(const QuantumState& state,
                                       int measured_register)
    : width_(state.register_width(measured_register)),
      cumulative_(state.marginal(measured_register)) {
  double running = 0.0;
  for (double& p : cumulative_) {
    running += p;
    p = running;
  }
}

uint64_t StateVectorSampler::draw(SplitMix64& rng) {
  const double u = rng.uniform01() * cumulative_.back();
  // upper_bound never stops on a zero-mass entry: its cumulative value equals
  // its predecessor's.
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) {
    it = std::lower_bound(cumulative_.begin(), cumulative_.end(),
                          cumulative_.back());
  }
  return static_cast<uint64_t>(it - cumulative_.begin());
}

std::unique_ptr<OutcomeSampler> make_dj_sampler(const BooleanFunction& f,
                                                SamplerMode mode) {
  if (mode == SamplerMode::kSpectral) {
    return std::make_unique<SpectralSampler>(fwht(f));
  }
  return std::make_unique<StateVectorSampler>(dj_state(f), 0);
}

std::unique_ptr<OutcomeSampler> make_qwt_sampler(const VectorialFunction& F,
                                                 uint32_t b, SamplerMode mode) {
  if (mode == SamplerMode::kSpectral) {
    return std::make_unique<SpectralSampler>(component_spectrum(F, b));
  }
  return std::make_unique<StateVectorSampler>(qwt_bf_state(F, b), 0);
}

BitVector dj_sample(const BooleanFunction& f, uint64_t seed, SamplerMode mode) {
  auto sampler = make_dj_sampler(f, mode);
  SplitMix64 rng(seed);
  return BitVector(f.num_vars(), sampler->draw(rng));
}

BitVector qwt_bf_sample(const VectorialFunction& F, uint32_t b, uint64_t seed,
                        SamplerMode mode) {
  auto sampler = make_qwt_sampler(F, b, mode);
  SplitMix64 rng(seed);
  return BitVector(F.num_inputs(), sampler->draw(rng));
}

std::vector<uint64_t> sample_stream(OutcomeSampler& sampler, uint64_t seed,
                                    uint64_t count) {
  SplitMix64 rng(seed);
  std::vector<uint64_t> out;
  out.reserve(count);
  for (uint64_t i = 0; i < count; ++i) out.push_back(sampler.draw(rng));
  return out;
}

}  // namespace walshgl
