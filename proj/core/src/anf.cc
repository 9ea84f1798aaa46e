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

#include "walshgl/anf.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "walshgl/errors.h"

namespace walshgl {
namespace {

// A monomial is the set of its variable indices, kept as a bitmask over
// 1-based indices (bit i <-> x_i). Conversion to the table encoding happens
// once n is known.
struct ParsedTerm {
  uint32_t vars = 0;
  bool zero = false;
};

class AnfParser {
 public:
  explicit AnfParser(std::string_view text) : text_(text) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty ANF expression", pos_);
    terms.push_back(term());
    skip_space();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '+') {
        throw ParseError(std::string("expected '+' or end of input, got '") +
                             text_[pos_] + "'",
                         pos_);
      }
      ++pos_;
      skip_space();
      terms.push_back(term());
      skip_space();
    }
    return terms;
  }

  int max_index() const { return max_index_; }

 private:
  ParsedTerm term() {
    if (pos_ >= text_.size()) throw ParseError("expected a monomial", pos_);
    char c = text_[pos_];
    if (c == '1' || c == '0') {
      std::size_t start = pos_++;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("only the constants 0 and 1 are allowed", start);
      }
      return ParsedTerm{0, c == '0'};
    }
    ParsedTerm t;
    t.vars |= uint32_t{1} << variable();
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '*') break;
      ++pos_;
      skip_space();
      t.vars |= uint32_t{1} << variable();
    }
    if (pos_ < text_.size() && text_[pos_] != '+') {
      throw ParseError(std::string("unexpected '") + text_[pos_] +
                           "' after variable; products need an explicit '*'",
                       pos_);
    }
    return t;
  }

  int variable() {
    std::size_t start = pos_;
    if (pos_ >= text_.size() || (text_[pos_] != 'x' && text_[pos_] != 'X')) {
      throw ParseError("expected a variable 'x<index>'", pos_);
    }
    ++pos_;
    std::size_t digits_start = pos_;
    long index = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > 1000) index = 1000;
      ++pos_;
    }
    if (pos_ == digits_start) {
      throw ParseError("variable is missing its index", start);
    }
    if (index < 1 || index > kMaxVariables) {
      throw ParseError("variable index " + std::to_string(index) +
                           " outside [1, " + std::to_string(kMaxVariables) +
                           "]",
                       start);
    }
    max_index_ = std::max(max_index_, static_cast<int>(index));
    return static_cast<int>(index);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_index_ = 0;
};

// Variable mask (bit i <-> x_i) to table encoding (x_1 is the MSB of n bits).
uint64_t to_table_mask(uint32_t vars, int n) {
  uint64_t u = 0;
  for (int i = 1; i <= n; ++i) {
    if ((vars >> i) & 1u) u |= uint64_t{1} << (n - i);
  }
  return u;
}

void moebius_inplace(std::vector<uint8_t>& t) {
  for (std::size_t h = 1; h < t.size(); h <<= 1) {
    for (std::size_t i = 0; i < t.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) t[j + h] ^= t[j];
    }
  }
}

}  // namespace

BooleanFunction parse_anf(std::string_view text, std::optional<int> n) {
  AnfParser parser(text);
  std::vector<ParsedTerm> terms = parser.parse();
  int vars = n.value_or(std::max(parser.max_index(), 1));
  check_variable_count(vars);
  if (vars < parser.max_index()) {
    throw ParseError("expression uses x" + std::to_string(parser.max_index()) +
                     " but n=" + std::to_string(vars));
  }
  std::vector<uint8_t> coeffs(uint64_t{1} << vars, 0);
  for (const ParsedTerm& t : terms) {
    if (t.zero) continue;
    coeffs[to_table_mask(t.vars, vars)] ^= 1;
  }
  // The Moebius transform is its own inverse.
  moebius_inplace(coeffs);
  return BooleanFunction::tabulate(vars,
                                   [&coeffs](uint64_t x) { return coeffs[x] != 0; });
}

std::vector<uint8_t> anf_coefficients(const BooleanFunction& f) {
  std::vector<uint8_t> t(f.size());
  for (uint64_t x = 0; x < f.size(); ++x) t[x] = f(x) ? 1 : 0;
  moebius_inplace(t);
  return t;
}

std::string serialize_anf(const BooleanFunction& f) {
  const int n = f.num_vars();
  std::vector<uint8_t> coeffs = anf_coefficients(f);
  // Each monomial as its sorted list of variable indices.
  std::vector<std::vector<int>> monomials;
  for (uint64_t u = 0; u < coeffs.size(); ++u) {
    if (!coeffs[u]) continue;
    std::vector<int> vars;
    for (int i = 1; i <= n; ++i) {
      if ((u >> (n - i)) & 1u) vars.push_back(i);
    }
    monomials.push_back(std::move(vars));
  }
  if (monomials.empty()) return "0";
  std::sort(monomials.begin(), monomials.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::string out;
  for (const auto& m : monomials) {
    if (!out.empty()) out += "+";
    if (m.empty()) {
      out += "1";
      continue;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) out += "*";
      out += "x" + std::to_string(m[k]);
    }
  }
  return out;
}

}  // namespace walshgl
