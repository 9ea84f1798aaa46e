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

#include "walshgl/threshold.h"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "walshgl/errors.h"

namespace walshgl {
namespace {

// Thresholds below 2^-60 all classify integer coefficients identically for
// n <= 24 (any nonzero |W| >= 2 passes, W = 0 fails), so dyadic denominators
// are capped there.
constexpr int kMaxDyadicExponent = 60;

void check_range(unsigned __int128 num, unsigned __int128 den) {
  if (num == 0 || num > den) {
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  }
}

}  // namespace

Threshold::Threshold(unsigned __int128 num, unsigned __int128 den, double value)
    : num_(num), den_(den), value_(value) {}

Threshold Threshold::from_decimal(std::string_view literal) {
  std::size_t i = 0;
  unsigned __int128 num = 0;
  unsigned __int128 den = 1;
  bool any_digit = false;
  while (i < literal.size() && std::isdigit(static_cast<unsigned char>(literal[i]))) {
    num = num * 10 + static_cast<unsigned>(literal[i] - '0');
    if (num > 10) throw std::invalid_argument("epsilon must lie in (0, 1]");
    any_digit = true;
    ++i;
  }
  if (i < literal.size() && literal[i] == '.') {
    ++i;
    int frac_digits = 0;
    while (i < literal.size() &&
           std::isdigit(static_cast<unsigned char>(literal[i]))) {
      if (++frac_digits > 18) {
        throw ParseError("epsilon has more than 18 fractional digits", i);
      }
      num = num * 10 + static_cast<unsigned>(literal[i] - '0');
      den *= 10;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit || i != literal.size()) {
    throw ParseError("epsilon '" + std::string(literal) +
                     "' is not a decimal literal");
  }
  check_range(num, den);
  return Threshold(num, den,
                   static_cast<double>(num) / static_cast<double>(den));
}

Threshold Threshold::from_double(double eps) {
  if (!(eps > 0.0) || !(eps <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  }
  int exp = 0;
  double mant = std::frexp(eps, &exp);  // eps = mant * 2^exp, mant in [0.5, 1)
  // mant * 2^53 is an integer.
  auto num = static_cast<unsigned __int128>(std::ldexp(mant, 53));
  int shift = 53 - exp;  // eps = num / 2^shift
  while (shift > 0 && (num & 1) == 0) {
    num >>= 1;
    --shift;
  }
  if (shift > kMaxDyadicExponent) {
    return Threshold(1, static_cast<unsigned __int128>(1) << kMaxDyadicExponent,
                     eps);
  }
  return Threshold(num, static_cast<unsigned __int128>(1) << shift, eps);
}

Threshold Threshold::half() const {
  if (num_ % 2 == 0) return Threshold(num_ / 2, den_, value_ / 2);
  return Threshold(num_, den_ * 2, value_ / 2);
}

bool Threshold::admits(int64_t w, int n) const {
  unsigned __int128 mag = static_cast<unsigned __int128>(w < 0 ? -w : w);
  return mag * den_ >= num_ << n;
}

std::string Threshold::str() const {
  std::ostringstream out;
  out.precision(17);
  out << value_;
  return out.str();
}

}  // namespace walshgl
