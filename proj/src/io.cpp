// Copyright 2026 The weakgiant Authors
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

#include "weakgiant/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

#include "weakgiant/error.hpp"

namespace weakgiant {
namespace {

template <typename T>
bool parse_number(std::string_view token, T& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<DegreeEntry> read_table(std::istream& in) {
  std::vector<DegreeEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 3) {
      fail(line_no, "expected 3 columns `n k prob`, found " + std::to_string(tokens.size()));
    }
    DegreeEntry e;
    if (!parse_number(tokens[0], e.n)) fail(line_no, "bad integer '" + std::string(tokens[0]) + "'");
    if (!parse_number(tokens[1], e.k)) fail(line_no, "bad integer '" + std::string(tokens[1]) + "'");
    if (!parse_number(tokens[2], e.prob)) {
      fail(line_no, "bad probability '" + std::string(tokens[2]) + "'");
    }
    entries.push_back(e);
  }
  return entries;
}

std::vector<DegreeEntry> read_table_file(const std::string& path) {
  if (path == "-") return read_table(std::cin);
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return read_table(file);
}

void write_table(std::ostream& out, const BivariateDegreeDist& d) {
  char buf[64];
  for (const auto& [key, prob] : d.entries()) {
    std::snprintf(buf, sizeof buf, "%.17g", prob);
    out << key.first << ' ' << key.second << ' ' << buf << '\n';
  }
}

}  // namespace weakgiant
