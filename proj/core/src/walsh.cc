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

#include "walshgl/walsh.h"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "walshgl/errors.h"

namespace walshgl {

WalshSpectrum::WalshSpectrum(int n, std::vector<int64_t> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  check_variable_count(n);
  if (coeffs_.size() != (uint64_t{1} << n)) {
    throw std::invalid_argument("spectrum needs 2^n coefficients");
  }
}

double WalshSpectrum::correlation(uint64_t a) const {
  return std::ldexp(static_cast<double>(coeffs_[a]), -n_);
}

double WalshSpectrum::probability(uint64_t a) const {
  double w = static_cast<double>(coeffs_[a]);
  return std::ldexp(w * w, -2 * n_);
}

uint64_t WalshSpectrum::parseval_sum() const {
  uint64_t total = 0;
  for (int64_t w : coeffs_) total += static_cast<uint64_t>(w * w);
  return total;
}

int64_t walsh_coefficient_naive(const BooleanFunction& f, uint64_t a) {
  if (a >= f.size()) throw std::invalid_argument("mask wider than n");
  int64_t sum = 0;
  for (uint64_t x = 0; x < f.size(); ++x) {
    sum += ((inner_product(a, x) ^ static_cast<int>(f(x))) != 0) ? -1 : 1;
  }
  return sum;
}

int64_t walsh_coefficient_naive(const BooleanFunction& f, const BitVector& a) {
  if (a.width != f.num_vars()) {
    throw std::invalid_argument("mask width " + std::to_string(a.width) +
                                " != n=" + std::to_string(f.num_vars()));
  }
  return walsh_coefficient_naive(f, a.value);
}

void walsh_hadamard_inplace(std::span<int64_t> data) {
  const std::size_t size = data.size();
  if (!std::has_single_bit(size)) {
    throw std::invalid_argument("butterfly length must be a power of two");
  }
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        int64_t u = data[j];
        int64_t v = data[j + h];
        data[j] = u + v;
        data[j + h] = u - v;
      }
    }
  }
}

WalshSpectrum fwht(const BooleanFunction& f) {
  std::vector<int64_t> data(f.size());
  for (uint64_t x = 0; x < f.size(); ++x) data[x] = f(x) ? -1 : 1;
  walsh_hadamard_inplace(data);
  return WalshSpectrum(f.num_vars(), std::move(data));
}

WalshSpectrum component_spectrum(const VectorialFunction& F, uint32_t b) {
  return fwht(F.component(b));
}

WalshSpectrum component_spectrum(const VectorialFunction& F,
                                 const BitVector& b) {
  return fwht(F.component(b));
}

std::vector<WalshSpectrum> linear_approximation_table(
    const VectorialFunction& F) {
  std::vector<WalshSpectrum> lat;
  const uint32_t masks = uint32_t{1} << F.num_outputs();
  lat.reserve(masks);
  for (uint32_t b = 0; b < masks; ++b) lat.push_back(component_spectrum(F, b));
  return lat;
}

std::vector<uint64_t> heavy_set_exact(const WalshSpectrum& spectrum,
                                      const Threshold& eps) {
  std::vector<uint64_t> out;
  for (uint64_t a = 0; a < spectrum.size(); ++a) {
    if (eps.admits(spectrum[a], spectrum.num_vars())) out.push_back(a);
  }
  return out;
}

namespace {

std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void put_le64(std::ostream& out, uint64_t v) {
  std::array<char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

uint64_t get_le64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw ParseError("truncated binary spectrum");
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

}  // namespace

void write_spectrum_csv(std::ostream& out, const WalshSpectrum& spectrum) {
  out << "index,bitstring,W,S\n";
  for (uint64_t a = 0; a < spectrum.size(); ++a) {
    out << a << ',' << to_bit_string(a, spectrum.num_vars()) << ','
        << spectrum[a] << ',' << shortest(spectrum.correlation(a)) << '\n';
  }
}

void write_spectrum_binary(std::ostream& out, const WalshSpectrum& spectrum) {
  put_le64(out, static_cast<uint64_t>(spectrum.num_vars()));
  for (int64_t w : spectrum.coeffs()) put_le64(out, static_cast<uint64_t>(w));
}

WalshSpectrum read_spectrum_binary(std::istream& in) {
  auto n = static_cast<int64_t>(get_le64(in));
  if (n < 1 || n > kMaxVariables) {
    throw ParseError("binary spectrum header has invalid n=" +
                     std::to_string(n));
  }
  std::vector<int64_t> coeffs(uint64_t{1} << n);
  for (auto& w : coeffs) w = static_cast<int64_t>(get_le64(in));
  return WalshSpectrum(static_cast<int>(n), std::move(coeffs));
}

}  // namespace walshgl
