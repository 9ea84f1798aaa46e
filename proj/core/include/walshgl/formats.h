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

#ifndef WALSHGL_FORMATS_H_
#define WALSHGL_FORMATS_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "walshgl/boolean_function.h"

namespace walshgl {

// `.tt` files: a header line "n=<int>" followed by one line of hex truth
// table (see parse_truth_table). Blank lines and lines starting with '#' are
// ignored.
BooleanFunction parse_tt_file_contents(std::string_view contents);
std::string format_tt_file(const BooleanFunction& f);

// `.sbox` files: a header "n=<int> m=<int>" followed by 2^n integers.
VectorialFunction parse_sbox_file_contents(std::string_view contents);
std::string format_sbox_file(const VectorialFunction& F);

BooleanFunction read_tt_file(const std::filesystem::path& path);
VectorialFunction read_sbox_file(const std::filesystem::path& path);

}  // namespace walshgl

#endif  // WALSHGL_FORMATS_H_
