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

#ifndef WALSHGL_THRESHOLD_H_
#define WALSHGL_THRESHOLD_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace walshgl {

// An accuracy level eps in (0, 1] held as an exact rational, so that tests of
// the form |S_f(a)| >= eps are decided in integer arithmetic:
//   |W_f(a)| * den >= num * 2^n.
// Decimal literals ("0.4") keep their decimal value; doubles keep their exact
// binary value.
class Threshold {
 public:
  static Threshold from_decimal(std::string_view literal);
  static Threshold from_double(double eps);

  double value() const { return value_; }
  // Same rational divided by two (the soundness level eps/2).
  Threshold half() const;

  // |w| >= eps * 2^n
  bool admits(int64_t w, int n) const;

  std::string str() const;

 private:
  Threshold(unsigned __int128 num, unsigned __int128 den, double value);

  unsigned __int128 num_;
  unsigned __int128 den_;
  double value_;
};

}  // namespace walshgl

#endif  // WALSHGL_THRESHOLD_H_
