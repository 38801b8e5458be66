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

#include "fourport/permanent.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "fourport/errors.hpp"

namespace fourport {

Complex permanent(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("permanent: matrix is not square");
  const std::size_t n = m.rows();
  if (n > kMaxPermanentOrder) throw DimensionError("permanent: order exceeds supported maximum");
  if (n == 0) return 1.0;

  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, walking the
  // column subsets S in Gray-code order so each step toggles one column.
  std::vector<Complex> row_sums(n, Complex{});
  Complex total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray_prev = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t flipped = gray ^ gray_prev;
    const auto col = static_cast<std::size_t>(std::countr_zero(flipped));
    const double sign_col = (gray & flipped) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sums[i] += sign_col * m(i, col);
    gray_prev = gray;

    Complex prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
    const bool odd = std::popcount(gray) & 1;
    total += odd ? -prod : prod;
  }
  return (n & 1) ? -total : total;
}

}  // namespace fourport
