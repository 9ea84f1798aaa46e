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

#include "walshgl/boolean_function.h"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

#include "walshgl/errors.h"

namespace walshgl {

void check_variable_count(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw CapacityError("variable count n=" + std::to_string(n) +
                        " outside supported range [1, " +
                        std::to_string(kMaxVariables) + "]");
  }
}

BooleanFunction::BooleanFunction(int n, std::vector<uint64_t> words)
    : n_(n), words_(std::move(words)) {
  check_variable_count(n);
  const uint64_t size = uint64_t{1} << n;
  if (words_.size() != (size + 63) / 64) {
    throw std::invalid_argument("truth table word count does not match 2^n");
  }
  if (size < 64 && (words_[0] >> size) != 0) {
    throw std::invalid_argument("truth table has bits set past 2^n");
  }
}

BooleanFunction BooleanFunction::zero(int n) { return constant(n, false); }

BooleanFunction BooleanFunction::constant(int n, bool value) {
  return tabulate(n, [value](uint64_t) { return value; });
}

BooleanFunction BooleanFunction::linear(const BitVector& a) {
  return tabulate(a.width,
                  [&a](uint64_t x) { return inner_product(a.value, x) != 0; });
}

bool BooleanFunction::operator()(const BitVector& x) const {
  if (x.width != n_) {
    throw std::invalid_argument("argument width " + std::to_string(x.width) +
                                " != n=" + std::to_string(n_));
  }
  return (*this)(x.value);
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

BooleanFunction parse_truth_table(std::string_view hex, int n) {
  check_variable_count(n);
  const uint64_t size = uint64_t{1} << n;
  const uint64_t digits = size < 4 ? 1 : size / 4;
  if (hex.size() != digits) {
    throw ParseError("truth table for n=" + std::to_string(n) + " needs " +
                     std::to_string(digits) + " hex digits, got " +
                     std::to_string(hex.size()));
  }
  std::vector<uint64_t> words((size + 63) / 64, 0);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    int v = hex_value(hex[i]);
    if (v < 0) throw ParseError("non-hex character in truth table", i);
    for (int k = 0; k < 4; ++k) {
      if (((v >> (3 - k)) & 1) == 0) continue;
      uint64_t x = 4 * i + static_cast<uint64_t>(k);
      if (x >= size) {
        throw ParseError("padding bits of a short truth table must be zero", i);
      }
      words[x >> 6] |= uint64_t{1} << (x & 63);
    }
  }
  return BooleanFunction(n, std::move(words));
}

std::string serialize_truth_table(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const uint64_t size = f.size();
  const uint64_t digits = size < 4 ? 1 : size / 4;
  std::string out;
  out.reserve(digits);
  for (uint64_t i = 0; i < digits; ++i) {
    int v = 0;
    for (int k = 0; k < 4; ++k) {
      uint64_t x = 4 * i + static_cast<uint64_t>(k);
      if (x < size && f(x)) v |= 1 << (3 - k);
    }
    out.push_back(kDigits[v]);
  }
  return out;
}

VectorialFunction::VectorialFunction(int n, int m, std::vector<uint32_t> table)
    : n_(n), m_(m), table_(std::move(table)) {
  check_variable_count(n);
  if (m < 1 || m > kMaxOutputs) {
    throw CapacityError("output count m=" + std::to_string(m) +
                        " outside supported range [1, " +
                        std::to_string(kMaxOutputs) + "]");
  }
  if (table_.size() != (uint64_t{1} << n)) {
    throw std::invalid_argument("S-box table needs 2^n=" +
                                std::to_string(uint64_t{1} << n) +
                                " entries, got " +
                                std::to_string(table_.size()));
  }
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if ((table_[x] >> m) != 0) {
      throw std::invalid_argument("S-box entry " + std::to_string(table_[x]) +
                                  " at index " + std::to_string(x) +
                                  " does not fit in m=" + std::to_string(m) +
                                  " bits");
    }
  }
}

VectorialFunction VectorialFunction::identity(int n) {
  check_variable_count(n);
  std::vector<uint32_t> table(uint64_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) {
    table[x] = static_cast<uint32_t>(x);
  }
  return VectorialFunction(n, n, std::move(table));
}

BooleanFunction VectorialFunction::component(const BitVector& b) const {
  if (b.width != m_) {
    throw std::invalid_argument("component mask width " +
                                std::to_string(b.width) +
                                " != m=" + std::to_string(m_));
  }
  return component(static_cast<uint32_t>(b.value));
}

BooleanFunction VectorialFunction::component(uint32_t b) const {
  if ((uint64_t{b} >> m_) != 0) {
    throw std::invalid_argument("component mask " + std::to_string(b) +
                                " does not fit in m=" + std::to_string(m_) +
                                " bits");
  }
  return BooleanFunction::tabulate(n_, [this, b](uint64_t x) {
    return inner_product(table_[x], b) != 0;
  });
}

VectorialFunction parse_sbox(std::string_view text, int n, int m) {
  check_variable_count(n);
  if (m < 1 || m > kMaxOutputs) {
    throw CapacityError("output count m=" + std::to_string(m) +
                        " outside supported range [1, " +
                        std::to_string(kMaxOutputs) + "]");
  }
  const uint64_t expected = uint64_t{1} << n;
  std::vector<uint32_t> values;
  values.reserve(expected);
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    std::string_view token = text.substr(start, i - start);
    int base = 10;
    std::string_view digits = token;
    if (token.size() > 2 && token[0] == '0' &&
        (token[1] == 'x' || token[1] == 'X')) {
      base = 16;
      digits = token.substr(2);
    }
    uint64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("invalid S-box value '" + std::string(token) + "'",
                       start);
    }
    if ((v >> m) != 0) {
      throw ParseError("S-box value " + std::string(token) +
                           " out of range [0, 2^" + std::to_string(m) + ")",
                       start);
    }
    if (values.size() == expected) {
      throw ParseError("S-box has more than 2^n=" + std::to_string(expected) +
                           " values",
                       start);
    }
    values.push_back(static_cast<uint32_t>(v));
  }
  if (values.size() != expected) {
    throw ParseError("S-box needs 2^n=" + std::to_string(expected) +
                     " values, got " + std::to_string(values.size()));
  }
  return VectorialFunction(n, m, std::move(values));
}

}  // namespace walshgl
