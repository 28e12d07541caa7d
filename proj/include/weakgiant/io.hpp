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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weakgiant/degdist.hpp"

namespace weakgiant {

// Reads the three-column `n k prob` text format. Blank lines and lines whose
// first non-blank character is '#' are skipped. Malformed lines raise
// ErrorKind::kParse with the 1-based line number in the message; semantic
// checks (normalization, duplicates) are left to from_entries.
std::vector<DegreeEntry> read_table(std::istream& in);

// Path "-" reads standard input.
std::vector<DegreeEntry> read_table_file(const std::string& path);

void write_table(std::ostream& out, const BivariateDegreeDist& d);

}  // namespace weakgiant
