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

#include "fourport/setting_weights.hpp"

#include <algorithm>
#include <stdexcept>

#include "fourport/errors.hpp"

namespace fourport {

SettingPattern canonical_pattern(std::span<const std::size_t> labels) {
  if (labels.size() != kPorts) throw DimensionError("canonical_pattern: need one label per port");
  SettingPattern out{};
  std::array<std::size_t, kPorts> seen{};
  std::uint8_t next = 0;
  for (std::size_t j = 0; j < kPorts; ++j) {
    std::uint8_t assigned = 0;
    for (std::uint8_t s = 0; s < next; ++s)
      if (seen[s] == labels[j]) assigned = static_cast<std::uint8_t>(s + 1);
    if (assigned == 0) {
      seen[next] = labels[j];
      assigned = ++next;
    }
    out[j] = assigned;
  }
  return out;
}

std::string to_display(const SettingPattern& p) {
  std::string out = "{";
  for (std::size_t j = 0; j < kPorts; ++j) {
    std::size_t first = j;
    for (std::size_t k = 0; k < j; ++k)
      if (p[k] == p[j]) {
        first = k;
        break;
      }
    if (j) out += ',';
    out += std::to_string(first + 1);
  }
  out += '}';
  return out;
}

SettingPattern parse_pattern(const std::string& text) {
  std::vector<std::size_t> labels;
  for (char ch : text) {
    if (ch >= '1' && ch <= '9') labels.push_back(static_cast<std::size_t>(ch - '0'));
    else if (ch != '{' && ch != '}' && ch != '(' && ch != ')' && ch != ',' && ch != ' ')
      throw std::invalid_argument("parse_pattern: unexpected character in '" + text + "'");
  }
  if (labels.size() != kPorts) throw std::invalid_argument("parse_pattern: need four labels");
  return canonical_pattern(labels);
}

const std::vector<SettingPattern>& all_setting_patterns() {
  static const std::vector<SettingPattern> patterns = [] {
    std::vector<SettingPattern> out;
    std::array<std::size_t, kPorts> labels{};
    for (labels[1] = 0; labels[1] < 4; ++labels[1])
      for (labels[2] = 0; labels[2] < 4; ++labels[2])
        for (labels[3] = 0; labels[3] < 4; ++labels[3]) out.push_back(canonical_pattern(labels));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return patterns;
}

double SettingWeights::total() const {
  double s = 0.0;
  for (const auto& [p, w] : weights) s += w;
  return s;
}

SettingPattern SettingWeights::dominant() const {
  if (weights.empty()) throw std::logic_error("SettingWeights::dominant: no weights");
  auto best = weights.begin();
  for (auto it = weights.begin(); it != weights.end(); ++it)
    if (it->second > best->second) best = it;
  return best->first;
}

SettingWeights setting_weights(const InternalExpansion& expansion) {
  const std::size_t k = std::max<std::size_t>(expansion.rank, 1);
  SettingWeights out;
  for (const auto& p : all_setting_patterns()) out.weights[p] = 0.0;

  std::array<std::size_t, kPorts> labels{};
  std::size_t combos = 1;
  for (std::size_t j = 0; j < kPorts; ++j) combos *= k;
  for (std::size_t idx = 0; idx < combos; ++idx) {
    std::size_t rest = idx;
    double w = 1.0;
    for (std::size_t j = 0; j < kPorts; ++j) {
      labels[j] = rest % k;
      rest /= k;
      w *= std::norm(expansion.coeffs(j, labels[j]));
    }
    if (w > 0.0) out.weights[canonical_pattern(labels)] += w;
  }
  return out;
}

}  // namespace fourport
