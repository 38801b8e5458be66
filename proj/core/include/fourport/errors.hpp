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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fourport {

// Shape mismatch between matrices, states or occupation vectors.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Particle-number mismatch or an occupation vector outside the supported range.
class PhotonNumberError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rejected unitary file. Line and column are 1-based; column 0 means the
// whole line.
class UnitaryParseError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kDimension, kNotUnitary };

  UnitaryParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) +
                           (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                           what),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fourport
