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

#include "fourport/engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

#include "fourport/errors.hpp"
#include "fourport/permanent.hpp"

namespace fourport {

namespace {

struct Branch {
  std::uint8_t port;
  Complex weight;
};

class Expander {
 public:
  Expander(const ComplexMatrix& u, std::size_t internal, KeyedAmplitudes& out)
      : internal_(internal), out_(out), branches_(u.rows()) {
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t k = 0; k < u.cols(); ++k)
        if (u(i, k) != Complex{}) branches_[i].push_back({static_cast<std::uint8_t>(k), u(i, k)});
  }

  void expand(ModeKey key, Complex coeff) {
    std::array<std::uint8_t, kMaxPhotons> modes;
    n_ = key.modes(modes);
    for (int p = 0; p < n_; ++p) {
      const auto idx = static_cast<std::size_t>(p);
      in_port_[idx] = static_cast<std::uint8_t>(modes[idx] / internal_);
      label_[idx] = static_cast<std::uint8_t>(modes[idx] % internal_);
    }
    recurse(0, coeff);
  }

 private:
  void recurse(int p, Complex coeff) {
    if (p == n_) {
      std::array<std::uint8_t, kMaxPhotons> sorted = out_modes_;
      std::sort(sorted.begin(), sorted.begin() + n_);
      out_[ModeKey::from_modes(std::span<const std::uint8_t>(sorted.data(),
                                                             static_cast<std::size_t>(n_)))] +=
          coeff;
      return;
    }
    const auto idx = static_cast<std::size_t>(p);
    for (const auto& b : branches_[in_port_[idx]]) {
      out_modes_[idx] = static_cast<std::uint8_t>(b.port * internal_ + label_[idx]);
      recurse(p + 1, coeff * b.weight);
    }
  }

  std::size_t internal_;
  KeyedAmplitudes& out_;
  std::vector<std::vector<Branch>> branches_;
  int n_ = 0;
  std::array<std::uint8_t, kMaxPhotons> in_port_{};
  std::array<std::uint8_t, kMaxPhotons> label_{};
  std::array<std::uint8_t, kMaxPhotons> out_modes_{};
};

}  // namespace

FockState evolve(const FockState& state, const ComplexMatrix& u) {
  if (!u.is_square() || u.rows() != state.spatial_modes())
    throw DimensionError("evolve: unitary must be " + std::to_string(state.spatial_modes()) + "x" +
                         std::to_string(state.spatial_modes()));
  KeyedAmplitudes coeffs;
  coeffs.reserve(4096);
  Expander expander(u, state.internal_modes(), coeffs);
  for (const auto& [key, amp] : state.amplitudes()) {
    if (amp == Complex{}) continue;
    expander.expand(key, amp / key.fock_norm());
  }
  FockState out(state.spatial_modes(), state.internal_modes());
  for (const auto& [key, c] : coeffs) out.add(key, c * key.fock_norm());
  return out;
}

FockState evolve(const FockState& state, const MultiportUnitary& u) {
  return evolve(state, u.matrix);
}

EventDistribution event_probabilities(const FockState& output) {
  const std::size_t n_ports = output.spatial_modes();
  const std::size_t internal = output.internal_modes();
  int photons = -1;
  for (const auto& [key, amp] : output.amplitudes()) {
    const int n = key.photons();
    if (photons >= 0 && n != photons)
      throw PhotonNumberError("event_probabilities: state mixes photon numbers");
    photons = n;
  }
  if (photons < 0) throw PhotonNumberError("event_probabilities: empty state");

  EventDistribution dist;
  dist.events = event_order(n_ports, photons);
  dist.probabilities.assign(dist.events.size(), 0.0);
  std::unordered_map<ModeKey, std::size_t, ModeKeyHash> index;
  for (std::size_t i = 0; i < dist.events.size(); ++i)
    index.emplace(ModeKey::from_occupation(dist.events[i]), i);

  std::array<std::uint8_t, kMaxPhotons> modes;
  for (const auto& [key, amp] : output.amplitudes()) {
    const int n = key.modes(modes);
    for (int p = 0; p < n; ++p) modes[static_cast<std::size_t>(p)] /= static_cast<std::uint8_t>(internal);
    const auto spatial =
        ModeKey::from_modes(std::span<const std::uint8_t>(modes.data(), static_cast<std::size_t>(n)));
    dist.probabilities[index.at(spatial)] += std::norm(amp);
  }
  return dist;
}

Complex permanent_cross_check(const ComplexMatrix& u, const OccupationVector& input,
                              const OccupationVector& output) {
  if (!u.is_square() || input.modes() != u.rows() || output.modes() != u.rows())
    throw DimensionError("permanent_cross_check: occupation vectors must match the unitary");
  if (input.total() != output.total())
    throw PhotonNumberError("permanent_cross_check: input has " + std::to_string(input.total()) +
                            " photons, output has " + std::to_string(output.total()));
  std::vector<std::size_t> rows, cols;
  for (std::size_t m = 0; m < input.modes(); ++m)
    for (int c = 0; c < input[m]; ++c) rows.push_back(m);
  for (std::size_t m = 0; m < output.modes(); ++m)
    for (int c = 0; c < output[m]; ++c) cols.push_back(m);
  ComplexMatrix sub(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = u(rows[r], cols[c]);
  return permanent(sub) / (multinomial_norm(input) * multinomial_norm(output));
}

EventDistribution simulate(const FockState& input, const ComplexMatrix& u) {
  return event_probabilities(evolve(input, u));
}

EventDistribution simulate(const WavepacketSpec& spec, const ComplexMatrix& u, InputTerms terms) {
  return simulate(build_input_state(gram_schmidt(spec), terms), u);
}

}  // namespace fourport
