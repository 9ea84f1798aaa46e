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

#ifndef WALSHGL_BITVECTOR_H_
#define WALSHGL_BITVECTOR_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace walshgl {

// Inner product over F_2 of two vectors in integer encoding.
inline int inner_product(uint64_t a, uint64_t b) {
  return std::popcount(a & b) & 1;
}

// A vector (x_1, ..., x_n) over F_2.
//
// Canonical integer encoding: x_1 is the most significant bit, so the string
// "1001" is x_1=1, x_2=0, x_3=0, x_4=1 and encodes to 9. Every table in the
// library is indexed by this encoding.
struct BitVector {
  int width = 0;
  uint64_t value = 0;

  BitVector() = default;
  BitVector(int width, uint64_t value);

  // Parses a string of '0'/'1' characters, x_1 first.
  static BitVector parse(std::string_view bits);

  // x_i for 1 <= i <= width.
  int bit(int i) const {
    return static_cast<int>((value >> (width - i)) & 1u);
  }

  std::string str() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;
};

inline int inner_product(const BitVector& a, const BitVector& b) {
  return inner_product(a.value, b.value);
}

// Binary string of `value` with `width` characters, MSB first.
std::string to_bit_string(uint64_t value, int width);

}  // namespace walshgl

#endif  // WALSHGL_BITVECTOR_H_
