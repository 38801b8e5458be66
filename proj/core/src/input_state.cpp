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

#include "fourport/input_state.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <cmath>
#include <vector>

namespace fourport {

namespace {

struct LinearTerm {
  std::uint8_t mode;
  Complex coeff;
};

// Product of a creation-operator polynomial with a linear form.
KeyedAmplitudes multiply(const KeyedAmplitudes& poly, const std::vector<LinearTerm>& form) {
  KeyedAmplitudes out;
  out.reserve(poly.size() * form.size());
  std::array<std::uint8_t, kMaxPhotons> modes;
  for (const auto& [key, c] : poly) {
    const int n = key.modes(modes);
    for (const auto& t : form) {
      modes[static_cast<std::size_t>(n)] = t.mode;
      const auto next =
          ModeKey::from_modes(std::span<const std::uint8_t>(modes.data(), static_cast<std::size_t>(n) + 1));
      out[next] += c * t.coeff;
    }
  }
  return out;
}

std::vector<LinearTerm> port_form(const InternalExpansion& exp, std::size_t port,
                                  std::size_t internal) {
  std::vector<LinearTerm> form;
  for (std::size_t e = 0; e < internal; ++e) {
    const Complex c = exp.coeffs(port, e);
    if (c != Complex{}) form.push_back({static_cast<std::uint8_t>(port * internal + e), c});
  }
  return form;
}

KeyedAmplitudes product(const std::vector<const std::vector<LinearTerm>*>& forms, Complex scale) {
  KeyedAmplitudes poly;
  poly[ModeKey{}] = scale;
  for (const auto* f : forms) poly = multiply(poly, *f);
  return poly;
}

}  // namespace

FockState build_input_state(const InternalExpansion& expansion, InputTerms terms) {
  const std::size_t internal = std::max<std::size_t>(expansion.rank, 1);
  FockState state(kPorts, internal);

  std::array<std::vector<LinearTerm>, kPorts> forms;
  for (std::size_t j = 0; j < kPorts; ++j) forms[j] = port_form(expansion, j, internal);

  const bool full = terms == InputTerms::kFull;
  const double norm = full ? 1.0 / std::sqrt(3.0) : 1.0;

  auto accumulate = [&state](const KeyedAmplitudes& poly) {
    for (const auto& [key, c] : poly) state.add(key, c * key.fock_norm());
  };

  accumulate(product({&forms[0], &forms[1], &forms[2], &forms[3]}, norm));
  if (full) {
    accumulate(product({&forms[0], &forms[0], &forms[1], &forms[1]}, 0.5 * norm));
    accumulate(product({&forms[2], &forms[2], &forms[3], &forms[3]}, 0.5 * norm));
  }
  return state;
}

}  // namespace fourport
