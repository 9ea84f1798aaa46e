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

#ifndef WALSHGL_ERRORS_H_
#define WALSHGL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walshgl {

// Malformed textual input. `position` is a 0-based character offset into the
// parsed text, or npos when the error is not tied to a location.
class ParseError : public std::invalid_argument {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::invalid_argument(position == npos
                                  ? what
                                  : what + " (at position " +
                                        std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A request exceeds a hard size cap (variable count, qubit count, ...).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace walshgl

#endif  // WALSHGL_ERRORS_H_
