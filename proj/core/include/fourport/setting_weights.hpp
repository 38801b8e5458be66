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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fourport/wavepacket.hpp"

namespace fourport {

/// Distinguishability setting of the four ports as a restricted-growth
/// string: port 1 carries label 1 and every new label is the smallest
/// unused integer. Ports sharing a label hold mutually indistinguishable
/// photons. (1,1,2,3) is written {1,1,3,4} in display form.
using SettingPattern = std::array<std::uint8_t, kPorts>;

/// Canonical pattern for an arbitrary per-port label assignment.
SettingPattern canonical_pattern(std::span<const std::size_t> labels);

/// Display form: each port shows the 1-based index of the first port in its
/// group, e.g. "{1,1,3,4}".
std::string to_display(const SettingPattern& p);

/// Parses either the canonical "(1,1,2,3)" or display "{1,1,3,4}" form.
SettingPattern parse_pattern(const std::string& text);

/// All 15 set partitions of the four ports, ordered lexicographically by
/// canonical string; (1,1,1,1) first, (1,2,3,4) last.
const std::vector<SettingPattern>& all_setting_patterns();

struct SettingWeights {
  std::map<SettingPattern, double> weights;

  double operator[](const SettingPattern& p) const {
    const auto it = weights.find(p);
    return it == weights.end() ? 0.0 : it->second;
  }
  double total() const;
  /// Pattern with the largest weight; ties resolve to the earliest pattern.
  SettingPattern dominant() const;
};

/// Decomposes the ports' temporal states over the Gram-Schmidt basis.
///
/// Each port j independently picks an internal label e with probability
/// |coeffs(j, e)|^2, giving up to 1*2*3*4 = 24 label assignments; the weight
/// of a pattern sums the products over assignments mapping to it. This is
/// exactly the label distribution of the normalized one-photon-per-port
/// component, and reads the double-twin components port by port.
SettingWeights setting_weights(const InternalExpansion& expansion);

}  // namespace fourport
