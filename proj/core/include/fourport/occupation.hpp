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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fourport {

// Largest photon number any occupation vector may carry. The physics here
// needs four; the cap keeps packed Fock keys within a machine word.
inline constexpr int kMaxPhotons = 8;

/// Photon counts per mode, e.g. a detection event s = (s1, s2, s3, s4).
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts);

  std::size_t modes() const noexcept { return counts_.size(); }
  int total() const noexcept { return total_; }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  std::span<const int> counts() const noexcept { return counts_; }

  /// "(s1,s2,...)" with 1-based reading order.
  std::string to_string() const;

  friend bool operator==(const OccupationVector& a, const OccupationVector& b) {
    return a.counts_ == b.counts_;
  }
  friend auto operator<=>(const OccupationVector& a, const OccupationVector& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<int> counts_;
  int total_ = 0;
};

/// All ways of distributing n_particles over n_modes, in descending
/// lexicographic order. Count is C(n_particles + n_modes - 1, n_modes - 1).
std::vector<OccupationVector> enumerate_events(std::size_t n_modes, int n_particles);

/// sqrt(prod_j s_j!), the normalization of a Fock state built from raw
/// creation operators.
double multinomial_norm(const OccupationVector& v);

/// n!, exact for the n <= kMaxPhotons range used here.
long long factorial(int n);

}  // namespace fourport
