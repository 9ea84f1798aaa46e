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

#ifndef WALSHGL_WALSH_H_
#define WALSHGL_WALSH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "walshgl/boolean_function.h"
#include "walshgl/threshold.h"

namespace walshgl {

// Exact Walsh spectrum in integer form:
//   W_f(a) = sum_x (-1)^{a.x xor f(x)} = 2^n * S_f(a),
// indexed by the canonical encoding of a.
class WalshSpectrum {
 public:
  WalshSpectrum(int n, std::vector<int64_t> coeffs);

  int num_vars() const { return n_; }
  uint64_t size() const { return coeffs_.size(); }

  int64_t operator[](uint64_t a) const { return coeffs_[a]; }
  // S_f(a) = W_f(a) / 2^n
  double correlation(uint64_t a) const;
  // S_f(a)^2, the probability that the Deutsch-Jozsa circuit outputs a.
  double probability(uint64_t a) const;

  std::span<const int64_t> coeffs() const { return coeffs_; }

  // sum_a W(a)^2; equals 4^n for every Boolean function.
  uint64_t parseval_sum() const;

  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;

 private:
  int n_;
  std::vector<int64_t> coeffs_;
};

// Direct evaluation of one coefficient, O(2^n).
int64_t walsh_coefficient_naive(const BooleanFunction& f, uint64_t a);
int64_t walsh_coefficient_naive(const BooleanFunction& f, const BitVector& a);

// In-place unnormalized Walsh-Hadamard butterfly; data.size() must be a
// power of two. Applying it twice multiplies by data.size().
void walsh_hadamard_inplace(std::span<int64_t> data);

// Full spectrum via the butterfly on the (-1)^f(x) array, Theta(n 2^n).
WalshSpectrum fwht(const BooleanFunction& f);

// Spectrum of the component x -> b.F(x).
WalshSpectrum component_spectrum(const VectorialFunction& F, uint32_t b);
WalshSpectrum component_spectrum(const VectorialFunction& F, const BitVector& b);

// Linear approximation table: lat[b][a] = W_{b.F}(a) for every output mask b.
std::vector<WalshSpectrum> linear_approximation_table(const VectorialFunction& F);

// { a : |S_f(a)| >= eps } in increasing encoding order, decided exactly.
std::vector<uint64_t> heavy_set_exact(const WalshSpectrum& spectrum,
                                      const Threshold& eps);

// CSV with header "index,bitstring,W,S".
void write_spectrum_csv(std::ostream& out, const WalshSpectrum& spectrum);

// Binary dump: n as a signed 64-bit little-endian integer, then the 2^n
// coefficients as signed 64-bit little-endian integers.
void write_spectrum_binary(std::ostream& out, const WalshSpectrum& spectrum);
WalshSpectrum read_spectrum_binary(std::istream& in);

}  // namespace walshgl

#endif  // WALSHGL_WALSH_H_
