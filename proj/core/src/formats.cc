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

#include "walshgl/formats.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "walshgl/errors.h"

namespace walshgl {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Content lines with comments and blanks dropped.
std::vector<std::string_view> content_lines(std::string_view contents) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = trim(contents.substr(start, end - start));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Parses "key=value key=value" into a map.
std::map<std::string, int> parse_header(std::string_view line) {
  std::map<std::string, int> out;
  std::istringstream in{std::string(line)};
  std::string field;
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("malformed header field '" + field + "'");
    }
    std::string key = field.substr(0, eq);
    std::string_view value = std::string_view(field).substr(eq + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw ParseError("header field '" + key + "' is not an integer");
    }
    out[key] = v;
  }
  return out;
}

int require(const std::map<std::string, int>& header, const std::string& key) {
  auto it = header.find(key);
  if (it == header.end()) throw ParseError("header is missing '" + key + "='");
  return it->second;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

BooleanFunction parse_tt_file_contents(std::string_view contents) {
  auto lines = content_lines(contents);
  if (lines.size() != 2) {
    throw ParseError(".tt file needs a header line and one hex line, got " +
                     std::to_string(lines.size()) + " lines");
  }
  int n = require(parse_header(lines[0]), "n");
  return parse_truth_table(lines[1], n);
}

std::string format_tt_file(const BooleanFunction& f) {
  return "n=" + std::to_string(f.num_vars()) + "\n" + serialize_truth_table(f) +
         "\n";
}

VectorialFunction parse_sbox_file_contents(std::string_view contents) {
  auto lines = content_lines(contents);
  if (lines.empty()) throw ParseError(".sbox file is empty");
  auto header = parse_header(lines[0]);
  int n = require(header, "n");
  int m = require(header, "m");
  std::string body;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    body.append(lines[i]);
    body.push_back('\n');
  }
  return parse_sbox(body, n, m);
}

std::string format_sbox_file(const VectorialFunction& F) {
  std::string out = "n=" + std::to_string(F.num_inputs()) +
                    " m=" + std::to_string(F.num_outputs()) + "\n";
  for (uint64_t x = 0; x < F.size(); ++x) {
    out += std::to_string(F(x));
    out.push_back((x % 16 == 15 || x + 1 == F.size()) ? '\n' : ' ');
  }
  return out;
}

BooleanFunction read_tt_file(const std::filesystem::path& path) {
  return parse_tt_file_contents(slurp(path));
}

VectorialFunction read_sbox_file(const std::filesystem::path& path) {
  return parse_sbox_file_contents(slurp(path));
}

}  // namespace walshgl
