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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fourport/complex_matrix.hpp"
#include "fourport/occupation.hpp"

namespace fourport {

/// A multiset of at most kMaxPhotons mode indices packed into one word.
///
/// Byte p holds the p-th smallest occupied mode index; unused bytes are
/// 0xFF. The same key therefore names both a raw creation-operator
/// monomial and the Fock basis state it creates.
class ModeKey {
 public:
  static constexpr std::uint8_t kEmpty = 0xFF;
  static constexpr std::size_t kMaxModes = kEmpty;

  constexpr ModeKey() = default;

  /// Builds a key from mode indices in any order.
  static ModeKey from_modes(std::span<const std::uint8_t> modes);
  static ModeKey from_occupation(const OccupationVector& occ);

  std::uint64_t bits() const noexcept { return bits_; }
  int photons() const noexcept;
  std::uint8_t mode(std::size_t p) const noexcept {
    return static_cast<std::uint8_t>(bits_ >> (8 * p));
  }
  /// Sorted mode list; returns the photon count.
  int modes(std::array<std::uint8_t, kMaxPhotons>& out) const noexcept;

  OccupationVector to_occupation(std::size_t n_modes) const;

  /// sqrt(prod_m n_m!) over the occupied modes.
  double fock_norm() const noexcept;

  friend bool operator==(ModeKey, ModeKey) = default;

 private:
  std::uint64_t bits_ = ~std::uint64_t{0};
};

struct ModeKeyHash {
  std::size_t operator()(ModeKey k) const noexcept {
    std::uint64_t x = k.bits();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

using KeyedAmplitudes = std::unordered_map<ModeKey, Complex, ModeKeyHash>;

/// Sparse state over spatial x internal modes. Mode index of (port, label) is
/// port * internal_modes + label. Stored values are Fock-basis amplitudes.
class FockState {
 public:
  FockState(std::size_t spatial_modes, std::size_t internal_modes);

  std::size_t spatial_modes() const noexcept { return spatial_; }
  std::size_t internal_modes() const noexcept { return internal_; }
  std::size_t mode_count() const noexcept { return spatial_ * internal_; }
  std::size_t mode_index(std::size_t port, std::size_t label) const noexcept {
    return port * internal_ + label;
  }

  /// Adds amp to the amplitude of the basis state occ (length mode_count()).
  void add(const OccupationVector& occ, Complex amp);
  void add(ModeKey key, Complex amp);
  Complex amplitude(const OccupationVector& occ) const;

  double norm_squared() const noexcept;
  std::size_t size() const noexcept { return amps_.size(); }
  const KeyedAmplitudes& amplitudes() const noexcept { return amps_; }

  /// Entries with |amp| > threshold, sorted by descending occupation vector.
  std::vector<std::pair<OccupationVector, Complex>> entries(double threshold = 0.0) const;

 private:
  std::size_t spatial_;
  std::size_t internal_;
  KeyedAmplitudes amps_;
};

}  // namespace fourport
