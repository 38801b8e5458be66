// Copyright 2026 The fourport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fourport::cli {

using Cell = std::variant<std::string, double>;

/// Tabular command output: '#'-prefixed metadata, a header and rows.
struct OutputTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_meta(std::string key, std::string value) {
    metadata.emplace_back(std::move(key), std::move(value));
  }
  void add_meta(std::string key, double value);

  /// Index of a header column; throws std::out_of_range.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;

  /// Throws std::logic_error if any row's width differs from the header.
  void check_shape() const;
};

/// Shortest round-trippable text for a double (17 significant digits).
std::string format_number(double x);

void write_csv(std::ostream& out, const OutputTable& table);
void write_json(std::ostream& out, const OutputTable& table);

/// Reads back what write_csv produced; cells that parse as numbers become
/// doubles.
OutputTable read_csv(std::istream& in);

}  // namespace fourport::cli
