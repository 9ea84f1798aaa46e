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

#ifndef WALSHGL_TESTS_ORACLES_H_
#define WALSHGL_TESTS_ORACLES_H_

// Brute-force reference computations used only by tests. They deliberately
// avoid the library's encoding helpers and transforms.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "walshgl/boolean_function.h"
#include "walshgl/rng.h"

namespace walshgl::testing {

#ifndef WALSHGL_TEST_DATA_DIR
#define WALSHGL_TEST_DATA_DIR "tests/data"
#endif

inline std::string data_path(const std::string& name) {
  return std::string(WALSHGL_TEST_DATA_DIR) + "/" + name;
}

// x_i (1-based, x_1 most significant) of an n-bit index.
inline int var(uint64_t x, int i, int n) { return static_cast<int>((x >> (n - i)) & 1); }

// a.x computed coordinate by coordinate.
inline int dot_by_coordinates(uint64_t a, uint64_t x, int n) {
  int acc = 0;
  for (int i = 1; i <= n; ++i) acc ^= var(a, i, n) & var(x, i, n);
  return acc;
}

// Definition of W_f(a) with nothing shared with the library's transform.
inline int64_t walsh_by_definition(const BooleanFunction& f, uint64_t a) {
  const int n = f.num_vars();
  int64_t sum = 0;
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    sum += (dot_by_coordinates(a, x, n) ^ static_cast<int>(f(x))) ? -1 : 1;
  }
  return sum;
}

inline std::vector<int64_t> spectrum_by_definition(const BooleanFunction& f) {
  std::vector<int64_t> out(f.size());
  for (uint64_t a = 0; a < f.size(); ++a) out[a] = walsh_by_definition(f, a);
  return out;
}

// lat[b][a] = sum_x (-1)^{a.x xor b.F(x)}, double loop over masks.
inline std::vector<std::vector<int64_t>> lat_by_definition(const VectorialFunction& F) {
  const int n = F.num_inputs();
  const int m = F.num_outputs();
  std::vector<std::vector<int64_t>> lat(uint64_t{1} << m,
                                        std::vector<int64_t>(uint64_t{1} << n, 0));
  for (uint64_t b = 0; b < lat.size(); ++b) {
    for (uint64_t a = 0; a < lat[b].size(); ++a) {
      int64_t sum = 0;
      for (uint64_t x = 0; x < F.size(); ++x) {
        int bit = dot_by_coordinates(a, x, n) ^ dot_by_coordinates(b, F(x), m);
        sum += bit ? -1 : 1;
      }
      lat[b][a] = sum;
    }
  }
  return lat;
}

inline BooleanFunction random_function(int n, SplitMix64& rng) {
  return BooleanFunction::tabulate(n, [&rng](uint64_t) { return (rng() & 1) != 0; });
}

inline VectorialFunction random_vectorial(int n, int m, SplitMix64& rng) {
  std::vector<uint32_t> table(uint64_t{1} << n);
  for (auto& v : table) v = static_cast<uint32_t>(rng.below(uint64_t{1} << m));
  return VectorialFunction(n, m, std::move(table));
}

// P(Binomial(trials, p) < k), summed in log space.
inline double binomial_cdf_below(uint64_t trials, double p, uint64_t k) {
  double total = 0.0;
  for (uint64_t i = 0; i < k && i <= trials; ++i) {
    double log_term = std::lgamma(static_cast<double>(trials) + 1) -
                      std::lgamma(static_cast<double>(i) + 1) -
                      std::lgamma(static_cast<double>(trials - i) + 1) +
                      static_cast<double>(i) * std::log(p) +
                      static_cast<double>(trials - i) * std::log1p(-p);
    total += std::exp(log_term);
  }
  return total;
}

// P(Binomial(trials, p) >= k).
inline double binomial_tail_at_least(uint64_t trials, double p, uint64_t k) {
  double total = 0.0;
  for (uint64_t i = k; i <= trials; ++i) {
    double log_term = std::lgamma(static_cast<double>(trials) + 1) -
                      std::lgamma(static_cast<double>(i) + 1) -
                      std::lgamma(static_cast<double>(trials - i) + 1) +
                      static_cast<double>(i) * std::log(p) +
                      static_cast<double>(trials - i) * std::log1p(-p);
    total += std::exp(log_term);
  }
  return total;
}

// n = 6 function whose largest coefficient sits at w0 = 101101 with
// W = 18 (S = 0.28125), just above eps = 0.25; every other |W| is at most 14.
// Built from the linear function w0.x by flipping 23 seeded points (seed
// picked by search); tests confirm the spectrum.
inline constexpr uint64_t kNearThresholdW0 = 0b101101;
inline BooleanFunction near_threshold_fixture() {
  const int n = 6;
  std::vector<bool> flip(64, false);
  SplitMix64 rng(20261029);
  int flipped = 0;
  while (flipped < 23) {
    uint64_t x = rng.below(64);
    if (!flip[x]) {
      flip[x] = true;
      ++flipped;
    }
  }
  return BooleanFunction::tabulate(n, [&flip](uint64_t x) {
    return (dot_by_coordinates(kNearThresholdW0, x, 6) != 0) != flip[x];
  });
}

// Maiorana-McFarland bent function on 6 variables: x1x4 + x2x5 + x3x6.
// Every coefficient has |S| = 1/8.
inline BooleanFunction bent6() {
  return BooleanFunction::tabulate(6, [](uint64_t x) {
    return ((var(x, 1, 6) & var(x, 4, 6)) ^ (var(x, 2, 6) & var(x, 5, 6)) ^
            (var(x, 3, 6) & var(x, 6, 6))) != 0;
  });
}

}  // namespace walshgl::testing

#endif  // WALSHGL_TESTS_ORACLES_H_
