// Copyright 2026 The EVKG Toolkit Authors.
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

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evkg::ingest {

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("CSV line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct CsvRow {
  /// Physical line on which the record starts (the header is line 1).
  std::size_t line;
  std::vector<std::string> fields;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;

  /// Column index by header name, or throws CsvError naming the column.
  std::size_t column(std::string_view name) const;
};

/// RFC 4180: comma separated, double-quoted fields with "" escapes, CRLF or
/// LF line ends. A header row is required. Blank lines are ignored.
CsvTable parse_csv(std::string_view text);

/// Reads a whole file. Throws std::runtime_error naming the path when it
/// cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace evkg::ingest
