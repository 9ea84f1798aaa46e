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

#include "walshgl/bitvector.h"

#include <stdexcept>

#include "walshgl/errors.h"

namespace walshgl {

BitVector::BitVector(int width, uint64_t value) : width(width), value(value) {
  if (width < 0 || width > 64) {
    throw std::invalid_argument("bit vector width must be in [0, 64], got " +
                                std::to_string(width));
  }
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("value " + std::to_string(value) +
                                " does not fit in " + std::to_string(width) +
                                " bits");
  }
}

BitVector BitVector::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > 64) {
    throw ParseError("bit string must have 1..64 characters");
  }
  uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    if (c != '0' && c != '1') {
      throw ParseError(std::string("expected '0' or '1', got '") + c + "'", i);
    }
    v = (v << 1) | static_cast<uint64_t>(c - '0');
  }
  return BitVector(static_cast<int>(bits.size()), v);
}

std::string BitVector::str() const { return to_bit_string(value, width); }

std::string to_bit_string(uint64_t value, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

}  // namespace walshgl
