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

#include "fourport/occupation.hpp"

#include <cmath>
#include <numeric>

#include "fourport/errors.hpp"

namespace fourport {

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw PhotonNumberError("occupation counts must be non-negative");
  }
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0);
  if (total_ > kMaxPhotons)
    throw PhotonNumberError("total photon number " + std::to_string(total_) + " exceeds cap of " +
                            std::to_string(kMaxPhotons));
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

std::string OccupationVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  out += ')';
  return out;
}

namespace {

void compositions(std::size_t mode, int remaining, std::vector<int>& current,
                  std::vector<OccupationVector>& out) {
  if (mode + 1 == current.size()) {
    current[mode] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    current[mode] = c;
    compositions(mode + 1, remaining - c, current, out);
  }
}

}  // namespace

std::vector<OccupationVector> enumerate_events(std::size_t n_modes, int n_particles) {
  if (n_modes == 0) throw DimensionError("enumerate_events: need at least one mode");
  if (n_particles < 0) throw PhotonNumberError("enumerate_events: negative particle number");
  std::vector<OccupationVector> out;
  std::vector<int> current(n_modes, 0);
  compositions(0, n_particles, current, out);
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double multinomial_norm(const OccupationVector& v) {
  double prod = 1.0;
  for (int c : v.counts()) prod *= static_cast<double>(factorial(c));
  return std::sqrt(prod);
}

}  // namespace fourport
