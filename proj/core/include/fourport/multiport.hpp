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

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "fourport/complex_matrix.hpp"

namespace fourport {

/// The diamond-shaped four-port array. alpha is the phase enclosed by the
/// interfering paths; phi collects the relative input phases and multiplies
/// the first row.
struct MultiportUnitary {
  ComplexMatrix matrix;
  double alpha = 0.0;  // radians, reduced to [0, 2pi)
  double phi = 0.0;    // radians, reduced to [0, 2pi)
};

/// Builds
///   U = 1/2 [[e^{i phi}, e^{i phi}, e^{i(phi+alpha)}, e^{i(phi+alpha)}],
///            [1,         1,         -e^{i alpha},      -e^{i alpha}     ],
///            [1,        -1,          1,                -1               ],
///            [1,        -1,         -1,                 1               ]]
/// Rows index input ports, columns output ports.
MultiportUnitary build_four_port(double alpha, double phi);

struct ValidationReport {
  bool unitary = false;
  bool hadamard = false;
  double unitarity_deviation = 0.0;  // max_ij |(U U^dagger - I)_ij|
  double hadamard_deviation = 0.0;   // max_ij ||U_ij| - 1/sqrt(N)|
  double max_deviation = 0.0;        // larger of the two
};

// Tolerance used for matrices constructed in code.
inline constexpr double kConstructedTolerance = 1e-12;
// Tolerance used for matrices read back from text.
inline constexpr double kLoadedTolerance = 1e-8;

/// Checks unitarity and the complex-Hadamard property entrywise.
/// Throws DimensionError for non-square or empty input.
ValidationReport validate(const ComplexMatrix& u, double tolerance = kConstructedTolerance);

struct LoadedUnitary {
  ComplexMatrix matrix;
  ValidationReport report;
};

/// Reads the plain-text unitary format:
///
///   # comment
///   N
///   re+imj re+imj ...   (N rows of N entries)
///
/// Entries may also be purely real ("0.5") or purely imaginary ("-0.5j").
/// Throws UnitaryParseError naming the offending line and column, including
/// when the matrix deviates from unitarity by more than kLoadedTolerance.
LoadedUnitary parse_unitary(std::istream& in);
LoadedUnitary load_unitary(const std::filesystem::path& path);

/// Writes a matrix in the same format at 17 significant digits.
void write_unitary(std::ostream& out, const ComplexMatrix& u);

/// Parses one "re+imj" token. Returns false on malformed input.
bool parse_complex(std::string_view token, Complex& out);

}  // namespace fourport
