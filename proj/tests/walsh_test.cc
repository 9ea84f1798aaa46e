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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.h"
#include "walshgl/anf.h"
#include "walshgl/formats.h"
#include "walshgl/walsh.h"

namespace walshgl {
namespace {

BooleanFunction four_term() { return parse_anf("x1+x2+x2*x3+x3*x4"); }

TEST(WalshNaive, ConstantZero) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(walsh_coefficient_naive(BooleanFunction::zero(n), uint64_t{0}),
              int64_t{1} << n);
  }
}

TEST(WalshNaive, FourTerm) {
  BooleanFunction f = four_term();
  EXPECT_EQ(walsh_coefficient_naive(f, BitVector::parse("1001")), 8);
  EXPECT_EQ(walsh_coefficient_naive(f, BitVector::parse("1011")), -8);
  EXPECT_EQ(walsh_coefficient_naive(f, BitVector::parse("1100")), 8);
  EXPECT_EQ(walsh_coefficient_naive(f, BitVector::parse("1110")), 8);
  EXPECT_THROW(walsh_coefficient_naive(f, BitVector::parse("100")),
               std::invalid_argument);
}

TEST(WalshNaive, LinearFunctionIsADelta) {
  BitVector a0 = BitVector::parse("10110");
  BooleanFunction f = BooleanFunction::linear(a0);
  for (uint64_t b = 0; b < 32; ++b) {
    EXPECT_EQ(walsh_coefficient_naive(f, b), b == a0.value ? 32 : 0);
  }
}

TEST(Fwht, FourTermSpectrum) {
  WalshSpectrum s = fwht(four_term());
  for (uint64_t a = 0; a < 16; ++a) {
    int64_t expect = 0;
    if (a == 0b1001 || a == 0b1100 || a == 0b1110) expect = 8;
    if (a == 0b1011) expect = -8;
    EXPECT_EQ(s[a], expect) << to_bit_string(a, 4);
  }
  EXPECT_DOUBLE_EQ(s.correlation(0b1001), 0.5);
  EXPECT_DOUBLE_EQ(s.correlation(0b1011), -0.5);
  EXPECT_DOUBLE_EQ(s.probability(0b1011), 0.25);
}

TEST(Fwht, ConstantOne) {
  WalshSpectrum s = fwht(BooleanFunction::constant(3, true));
  std::vector<int64_t> expect{-8, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(std::vector<int64_t>(s.coeffs().begin(), s.coeffs().end()), expect);
}

TEST(Fwht, MatchesDefinitionOnRandomFunctions) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 8;
    BooleanFunction f = testing::random_function(n, rng);
    WalshSpectrum s = fwht(f);
    auto oracle = testing::spectrum_by_definition(f);
    for (uint64_t a = 0; a < f.size(); ++a) {
      ASSERT_EQ(s[a], oracle[a]);
      ASSERT_EQ(s[a], walsh_coefficient_naive(f, a));
    }
  }
}

TEST(Fwht, SpectrumInvariants) {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(12));
    BooleanFunction f = testing::random_function(n, rng);
    WalshSpectrum s = fwht(f);
    EXPECT_EQ(s.parseval_sum(), uint64_t{1} << (2 * n));
    for (int64_t w : s.coeffs()) {
      EXPECT_EQ(w % 2, 0);
      EXPECT_LE(std::llabs(w), int64_t{1} << n);
    }
  }
}

TEST(Fwht, ExtremeMagnitudeOnlyForAffine) {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    uint64_t a = rng.below(uint64_t{1} << n);
    bool d = rng() & 1;
    BooleanFunction affine = BooleanFunction::tabulate(
        n, [&](uint64_t x) { return (inner_product(a, x) != 0) != d; });
    WalshSpectrum s = fwht(affine);
    for (uint64_t b = 0; b < s.size(); ++b) {
      EXPECT_EQ(std::llabs(s[b]) == (int64_t{1} << n), b == a);
    }
  }
  // Non-affine functions never reach 2^n.
  WalshSpectrum s = fwht(parse_anf("x1*x2+x3", 3));
  for (int64_t w : s.coeffs()) EXPECT_LT(std::llabs(w), 8);
}

TEST(Fwht, ButterflyIsAnInvolutionUpToScale) {
  SplitMix64 rng(24);
  for (int n = 1; n <= 10; ++n) {
    BooleanFunction f = testing::random_function(n, rng);
    std::vector<int64_t> data(f.size());
    for (uint64_t x = 0; x < f.size(); ++x) data[x] = f(x) ? -1 : 1;
    std::vector<int64_t> twice = data;
    walsh_hadamard_inplace(twice);
    walsh_hadamard_inplace(twice);
    for (uint64_t x = 0; x < f.size(); ++x) {
      EXPECT_EQ(twice[x], data[x] * static_cast<int64_t>(f.size()));
    }
  }
  std::vector<int64_t> bad(3);
  EXPECT_THROW(walsh_hadamard_inplace(bad), std::invalid_argument);
}

TEST(Fwht, AffineShift) {
  SplitMix64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    BooleanFunction f = testing::random_function(n, rng);
    uint64_t c = rng.below(uint64_t{1} << n);
    int d = static_cast<int>(rng() & 1);
    BooleanFunction g = BooleanFunction::tabulate(n, [&](uint64_t x) {
      return (static_cast<int>(f(x)) ^ inner_product(c, x) ^ d) != 0;
    });
    WalshSpectrum wf = fwht(f);
    WalshSpectrum wg = fwht(g);
    for (uint64_t a = 0; a < wf.size(); ++a) {
      EXPECT_EQ(wg[a], (d ? -1 : 1) * wf[a ^ c]);
    }
  }
}

TEST(ComponentSpectrum, IdentityComponentIsADelta) {
  VectorialFunction id = VectorialFunction::identity(3);
  WalshSpectrum s = component_spectrum(id, BitVector::parse("010"));
  for (uint64_t a = 0; a < 8; ++a) EXPECT_EQ(s[a], a == 0b010 ? 8 : 0);
  WalshSpectrum z = component_spectrum(id, uint32_t{0});
  for (uint64_t a = 0; a < 8; ++a) EXPECT_EQ(z[a], a == 0 ? 8 : 0);
  EXPECT_THROW(component_spectrum(id, BitVector::parse("01")),
               std::invalid_argument);
}

TEST(ComponentSpectrum, LatMatchesDoubleLoop) {
  VectorialFunction F = parse_sbox("0 1 3 6 7 4 5 2", 3, 3);
  auto oracle = testing::lat_by_definition(F);
  auto lat = linear_approximation_table(F);
  ASSERT_EQ(lat.size(), 8u);
  for (uint64_t b = 0; b < 8; ++b) {
    for (uint64_t a = 0; a < 8; ++a) EXPECT_EQ(lat[b][a], oracle[b][a]);
  }
  // Frozen row from an independent computation: b = 001.
  std::vector<int64_t> row1{0, -4, 0, 4, 0, 4, 0, 4};
  EXPECT_EQ(std::vector<int64_t>(lat[1].coeffs().begin(), lat[1].coeffs().end()),
            row1);
}

TEST(ComponentSpectrum, AesComponentMatchesDefinition) {
  VectorialFunction aes = read_sbox_file(testing::data_path("aes.sbox"));
  WalshSpectrum s = component_spectrum(aes, uint32_t{1});
  int64_t max_abs = 0;
  for (uint64_t a = 0; a < 256; ++a) {
    ASSERT_EQ(s[a], testing::walsh_by_definition(aes.component(1), a));
    max_abs = std::max<int64_t>(max_abs, std::llabs(s[a]));
  }
  // AES has nonlinearity 112, so every component peaks at 256 - 2*112.
  EXPECT_EQ(max_abs, 32);
}

TEST(HeavySet, FourTerm) {
  WalshSpectrum s = fwht(four_term());
  std::vector<uint64_t> expect{0b1001, 0b1011, 0b1100, 0b1110};
  EXPECT_EQ(heavy_set_exact(s, Threshold::from_decimal("0.4")), expect);
  EXPECT_TRUE(heavy_set_exact(s, Threshold::from_decimal("0.6")).empty());
  // Closed inequality at the boundary.
  EXPECT_EQ(heavy_set_exact(s, Threshold::from_decimal("0.5")), expect);
  EXPECT_EQ(heavy_set_exact(s, Threshold::from_double(0.5)), expect);
}

TEST(HeavySet, ParsevalCountingBound) {
  SplitMix64 rng(26);
  const char* levels[] = {"0.1", "0.2", "0.25", "0.3", "0.5", "0.7", "1"};
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(10));
    WalshSpectrum s = fwht(testing::random_function(n, rng));
    for (const char* lvl : levels) {
      Threshold eps = Threshold::from_decimal(lvl);
      double bound = std::floor(1.0 / (eps.value() * eps.value()) + 1e-9);
      EXPECT_LE(static_cast<double>(heavy_set_exact(s, eps).size()), bound);
    }
  }
}

TEST(Threshold, ExactDecimalComparison) {
  // 0.1 * 2^4 = 1.6: |W| = 2 passes, and the decimal is not rounded.
  Threshold t = Threshold::from_decimal("0.1");
  EXPECT_TRUE(t.admits(2, 4));
  EXPECT_FALSE(t.admits(0, 4));
  // 0.375 * 16 = 6 exactly.
  Threshold e = Threshold::from_decimal("0.375");
  EXPECT_TRUE(e.admits(6, 4));
  EXPECT_TRUE(e.admits(-6, 4));
  EXPECT_FALSE(e.admits(4, 4));
  EXPECT_TRUE(e.half().admits(4, 4));   // 3 <= 4
  EXPECT_FALSE(e.half().admits(2, 4));
  EXPECT_TRUE(Threshold::from_decimal("1").admits(16, 4));
  EXPECT_FALSE(Threshold::from_decimal("1.0").admits(14, 4));
}

TEST(Threshold, Rejects) {
  EXPECT_THROW(Threshold::from_decimal("0"), std::invalid_argument);
  EXPECT_THROW(Threshold::from_decimal("1.5"), std::invalid_argument);
  EXPECT_THROW(Threshold::from_decimal("abc"), std::invalid_argument);
  EXPECT_THROW(Threshold::from_decimal("-0.3"), std::invalid_argument);
  EXPECT_THROW(Threshold::from_double(0.0), std::invalid_argument);
  EXPECT_THROW(Threshold::from_double(1.01), std::invalid_argument);
  EXPECT_THROW(Threshold::from_double(NAN), std::invalid_argument);
}

TEST(SpectrumExport, Csv) {
  std::ostringstream out;
  write_spectrum_csv(out, fwht(four_term()));
  std::string csv = out.str();
  EXPECT_EQ(csv.rfind("index,bitstring,W,S\n", 0), 0u);
  EXPECT_NE(csv.find("\n9,1001,8,0.5\n"), std::string::npos);
  EXPECT_NE(csv.find("\n11,1011,-8,-0.5\n"), std::string::npos);
}

TEST(SpectrumExport, BinaryLayoutAndRoundTrip) {
  WalshSpectrum s = fwht(four_term());
  std::ostringstream out;
  write_spectrum_binary(out, s);
  std::string bytes = out.str();
  ASSERT_EQ(bytes.size(), 8u * 17u);
  EXPECT_EQ(bytes[0], 4);  // n, little-endian
  for (int i = 1; i < 8; ++i) EXPECT_EQ(bytes[i], 0);
  // coefficient 11 = -8 as two's complement LE
  const std::string w11 = bytes.substr(8 * 12, 8);
  EXPECT_EQ(static_cast<unsigned char>(w11[0]), 0xf8);
  for (int i = 1; i < 8; ++i) EXPECT_EQ(static_cast<unsigned char>(w11[i]), 0xff);
  std::istringstream in(bytes);
  EXPECT_EQ(read_spectrum_binary(in), s);
  std::istringstream truncated(bytes.substr(0, 20));
  EXPECT_THROW(read_spectrum_binary(truncated), std::invalid_argument);
}

}  // namespace
}  // namespace walshgl
