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

#ifndef WALSHGL_BOOLEAN_FUNCTION_H_
#define WALSHGL_BOOLEAN_FUNCTION_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walshgl/bitvector.h"

namespace walshgl {

inline constexpr int kMaxVariables = 24;
inline constexpr int kMaxOutputs = 16;

// Throws CapacityError unless 1 <= n <= kMaxVariables.
void check_variable_count(int n);

// f: F_2^n -> F_2 stored as a bit-packed truth table. Entry encode(x) holds
// f(x). Immutable after construction.
class BooleanFunction {
 public:
  // Packed table: bit (x & 63) of words[x >> 6] is f(x). Bits past 2^n must
  // be zero.
  BooleanFunction(int n, std::vector<uint64_t> words);

  static BooleanFunction zero(int n);
  static BooleanFunction constant(int n, bool value);
  // x -> a.x
  static BooleanFunction linear(const BitVector& a);

  template <typename Fn>
  static BooleanFunction tabulate(int n, Fn&& fn) {
    check_variable_count(n);
    const uint64_t size = uint64_t{1} << n;
    std::vector<uint64_t> words((size + 63) / 64, 0);
    for (uint64_t x = 0; x < size; ++x) {
      if (fn(x)) words[x >> 6] |= uint64_t{1} << (x & 63);
    }
    return BooleanFunction(n, std::move(words));
  }

  int num_vars() const { return n_; }
  uint64_t size() const { return uint64_t{1} << n_; }

  bool operator()(uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  bool operator()(const BitVector& x) const;

  std::span<const uint64_t> words() const { return words_; }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) =
      default;

 private:
  int n_;
  std::vector<uint64_t> words_;
};

// Hex truth table. The first character holds f at indices 0..3, most
// significant bit of each nibble first. Tables with fewer than four entries
// (n = 1) use the high bits of a single digit; the unused low bits must be 0.
BooleanFunction parse_truth_table(std::string_view hex, int n);
std::string serialize_truth_table(const BooleanFunction& f);

// F: F_2^n -> F_2^m as a lookup table (S-box).
class VectorialFunction {
 public:
  VectorialFunction(int n, int m, std::vector<uint32_t> table);

  static VectorialFunction identity(int n);

  int num_inputs() const { return n_; }
  int num_outputs() const { return m_; }
  uint64_t size() const { return uint64_t{1} << n_; }

  uint32_t operator()(uint64_t x) const { return table_[x]; }
  std::span<const uint32_t> table() const { return table_; }

  // x -> b.F(x). `b` must have width m.
  BooleanFunction component(const BitVector& b) const;
  BooleanFunction component(uint32_t b) const;

  friend bool operator==(const VectorialFunction&, const VectorialFunction&) =
      default;

 private:
  int n_;
  int m_;
  std::vector<uint32_t> table_;
};

// Whitespace/comma separated integers (decimal or 0x-prefixed hex), listed in
// input-encoding order.
VectorialFunction parse_sbox(std::string_view text, int n, int m);

}  // namespace walshgl

#endif  // WALSHGL_BOOLEAN_FUNCTION_H_
