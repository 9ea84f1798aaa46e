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

#ifndef WALSHGL_ANF_H_
#define WALSHGL_ANF_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walshgl/boolean_function.h"

namespace walshgl {

// Parses an algebraic normal form: a "+"-separated sum over F_2 of monomials,
// each either a constant ("1", or "0" for the empty sum) or a "*"-separated
// product of variables x1..x24. Juxtaposed variables ("x1x2") are rejected.
//
// n defaults to the largest variable index (1 if there are none); an explicit
// n must be at least that index.
BooleanFunction parse_anf(std::string_view text,
                          std::optional<int> n = std::nullopt);

// Canonical ANF text: monomials ordered by degree, then lexicographically by
// variable index; the constant term first. The zero function prints as "0".
std::string serialize_anf(const BooleanFunction& f);

// Moebius transform. Entry u is 1 iff the monomial prod_{i : u_i = 1} x_i
// appears in the ANF, with u in the canonical encoding.
std::vector<uint8_t> anf_coefficients(const BooleanFunction& f);

}  // namespace walshgl

#endif  // WALSHGL_ANF_H_
