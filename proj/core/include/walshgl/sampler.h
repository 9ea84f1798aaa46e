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

#ifndef WALSHGL_SAMPLER_H_
#define WALSHGL_SAMPLER_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "walshgl/bitvector.h"
#include "walshgl/boolean_function.h"
#include "walshgl/qsim.h"
#include "walshgl/rng.h"
#include "walshgl/walsh.h"

namespace walshgl {

enum class SamplerMode { kSpectral, kStateVector };

SamplerMode parse_sampler_mode(std::string_view name);
std::string to_string(SamplerMode mode);

// One measurement of the first register of a prepared circuit, i.e. one
// oracle query. Draws consume randomness only from the supplied generator.
class OutcomeSampler {
 public:
  virtual ~OutcomeSampler() = default;
  virtual uint64_t draw(SplitMix64& rng) = 0;
  // Bit width of the outcomes.
  virtual int width() const = 0;
};

// Inverse-CDF sampling from P(w) = W(w)^2 / 4^n with integer weights, so
// P = 0 outcomes are never drawn and P is reproduced exactly.
class SpectralSampler final : public OutcomeSampler {
 public:
  explicit SpectralSampler(const WalshSpectrum& spectrum);

  uint64_t draw(SplitMix64& rng) override;
  int width() const override { return n_; }

 private:
  int n_;
  std::vector<uint64_t> cumulative_;
};

// Samples the measured register of a simulated state from its marginal.
class StateVectorSampler final : public OutcomeSampler {
 public:
  StateVectorSampler(const QuantumState& state, int measured_register);

  uint64_t draw(SplitMix64& rng) override;
  int width() const override { return width_; }

 private:
  int width_;
  std::vector<double> cumulative_;
};

// Measurement of the Deutsch-Jozsa circuit for f.
std::unique_ptr<OutcomeSampler> make_dj_sampler(const BooleanFunction& f,
                                                SamplerMode mode);
// Measurement of the quantum Walsh transform of b.F.
std::unique_ptr<OutcomeSampler> make_qwt_sampler(const VectorialFunction& F,
                                                 uint32_t b, SamplerMode mode);

// Single draws. The outcome has width n.
BitVector dj_sample(const BooleanFunction& f, uint64_t seed, SamplerMode mode);
BitVector qwt_bf_sample(const VectorialFunction& F, uint32_t b, uint64_t seed,
                        SamplerMode mode);

// `count` successive draws from one stream seeded with `seed`.
std::vector<uint64_t> sample_stream(OutcomeSampler& sampler, uint64_t seed,
                                    uint64_t count);

}  // namespace walshgl

#endif  // WALSHGL_SAMPLER_H_
