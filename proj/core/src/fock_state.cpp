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

#include "fourport/fock_state.hpp"

#include <algorithm>
#include <cmath>

#include "fourport/errors.hpp"

namespace fourport {

ModeKey ModeKey::from_modes(std::span<const std::uint8_t> modes) {
  if (modes.size() > static_cast<std::size_t>(kMaxPhotons))
    throw PhotonNumberError("ModeKey: more than kMaxPhotons photons");
  std::array<std::uint8_t, kMaxPhotons> sorted;
  sorted.fill(kEmpty);
  std::copy(modes.begin(), modes.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(modes.size()));
  ModeKey key;
  key.bits_ = 0;
  for (std::size_t p = 0; p < sorted.size(); ++p)
    key.bits_ |= std::uint64_t{sorted[p]} << (8 * p);
  return key;
}

ModeKey ModeKey::from_occupation(const OccupationVector& occ) {
  if (occ.modes() > kMaxModes) throw DimensionError("ModeKey: too many modes");
  std::array<std::uint8_t, kMaxPhotons> modes{};
  std::size_t n = 0;
  for (std::size_t m = 0; m < occ.modes(); ++m)
    for (int c = 0; c < occ[m]; ++c) modes[n++] = static_cast<std::uint8_t>(m);
  return from_modes(std::span<const std::uint8_t>(modes.data(), n));
}

int ModeKey::photons() const noexcept {
  int n = 0;
  while (n < kMaxPhotons && mode(static_cast<std::size_t>(n)) != kEmpty) ++n;
  return n;
}

int ModeKey::modes(std::array<std::uint8_t, kMaxPhotons>& out) const noexcept {
  int n = 0;
  for (; n < kMaxPhotons; ++n) {
    const std::uint8_t m = mode(static_cast<std::size_t>(n));
    if (m == kEmpty) break;
    out[static_cast<std::size_t>(n)] = m;
  }
  return n;
}

OccupationVector ModeKey::to_occupation(std::size_t n_modes) const {
  std::vector<int> counts(n_modes, 0);
  std::array<std::uint8_t, kMaxPhotons> ms;
  const int n = modes(ms);
  for (int p = 0; p < n; ++p) {
    if (ms[static_cast<std::size_t>(p)] >= n_modes)
      throw DimensionError("ModeKey: mode index beyond requested vector length");
    ++counts[ms[static_cast<std::size_t>(p)]];
  }
  return OccupationVector(std::move(counts));
}

double ModeKey::fock_norm() const noexcept {
  std::array<std::uint8_t, kMaxPhotons> ms;
  const int n = modes(ms);
  double prod = 1.0;
  int run = 1;
  for (int p = 1; p <= n; ++p) {
    if (p < n && ms[static_cast<std::size_t>(p)] == ms[static_cast<std::size_t>(p - 1)]) {
      ++run;
      prod *= run;
    } else {
      run = 1;
    }
  }
  return std::sqrt(prod);
}

FockState::FockState(std::size_t spatial_modes, std::size_t internal_modes)
    : spatial_(spatial_modes), internal_(internal_modes) {
  if (spatial_ == 0 || internal_ == 0) throw DimensionError("FockState: zero modes");
  if (spatial_ * internal_ > ModeKey::kMaxModes)
    throw DimensionError("FockState: too many modes for packed keys");
}

void FockState::add(const OccupationVector& occ, Complex amp) {
  if (occ.modes() != mode_count())
    throw DimensionError("FockState::add: occupation vector length does not match mode count");
  add(ModeKey::from_occupation(occ), amp);
}

void FockState::add(ModeKey key, Complex amp) { amps_[key] += amp; }

Complex FockState::amplitude(const OccupationVector& occ) const {
  if (occ.modes() != mode_count())
    throw DimensionError("FockState::amplitude: occupation vector length does not match");
  const auto it = amps_.find(ModeKey::from_occupation(occ));
  return it == amps_.end() ? Complex{} : it->second;
}

double FockState::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& [key, amp] : amps_) s += std::norm(amp);
  return s;
}

std::vector<std::pair<OccupationVector, Complex>> FockState::entries(double threshold) const {
  std::vector<std::pair<OccupationVector, Complex>> out;
  for (const auto& [key, amp] : amps_)
    if (std::abs(amp) > threshold) out.emplace_back(key.to_occupation(mode_count()), amp);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

}  // namespace fourport
