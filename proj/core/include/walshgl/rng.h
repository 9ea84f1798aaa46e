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

#ifndef WALSHGL_RNG_H_
#define WALSHGL_RNG_H_

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace walshgl {

// SplitMix64 (Steele, Lea & Flood 2014), the exact constants of the
// reference implementation. Output streams are part of the reproducibility
// contract of every seeded command: changing this generator changes results.
// kRngVersion is recorded in exported reports.
inline constexpr int kRngVersion = 1;

inline uint64_t splitmix64_mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Substream seed for trial/run/component `index` of a seeded experiment:
// seed xor hash(index).
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  return seed ^ splitmix64_mix(index + 0x9e3779b97f4a7c15ULL);
}

class SplitMix64 {
 public:
  using result_type = uint64_t;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64_mix(state_);
  }

  // Uniform on [0, bound) by rejection; platform independent, unlike
  // std::uniform_int_distribution.
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const uint64_t limit = max() - max() % bound;
    uint64_t r;
    do {
      r = (*this)();
    } while (r >= limit);
    return r % bound;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace walshgl

#endif  // WALSHGL_RNG_H_
