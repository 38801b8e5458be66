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

#include <cstddef>
#include <optional>
#include <vector>

#include "fourport/complex_matrix.hpp"
#include "fourport/fock_state.hpp"
#include "fourport/input_state.hpp"
#include "fourport/multiport.hpp"
#include "fourport/occupation.hpp"
#include "fourport/rational.hpp"

namespace fourport {

/// Sends every input creation operator a_{i,e} to sum_k u(i, k) b_{k,e}.
/// Internal labels pass through unchanged. Throws DimensionError unless u is
/// square with one row per spatial mode of the state.
FockState evolve(const FockState& state, const ComplexMatrix& u);
FockState evolve(const FockState& state, const MultiportUnitary& u);

/// Probabilities of spatial counting events, ordered as `events`.
struct EventDistribution {
  std::vector<OccupationVector> events;
  std::vector<double> probabilities;

  std::size_t size() const noexcept { return events.size(); }
  /// Probability of a specific event; throws std::out_of_range if absent.
  double operator[](const OccupationVector& s) const;
  double total() const;
};

/// Canonical event ordering: ascending probability for distinguishable
/// particles, ties broken by descending lexicographic order. For four
/// photons in four ports this places (4,0,0,0) first, (0,1,0,3) at
/// position 14 and (1,1,1,1) last.
std::vector<OccupationVector> event_order(std::size_t n_modes = 4, int n_photons = 4);

/// Marginalizes internal labels: detectors resolve ports and count photons
/// but integrate over arrival time.
EventDistribution event_probabilities(const FockState& output);

/// n! / (N^n prod_j s_j!) for n photons spread uniformly and independently
/// over N ports.
Rational multinomial_probability(const OccupationVector& s);

/// Distinguishable-photon probability of a four-photon four-port event.
/// Throws PhotonNumberError unless s has four modes and four photons.
Rational p_distinguishable(const OccupationVector& s);

/// Closed-form fully indistinguishable probability for the five events with
/// known expressions ((4,0,0,0), (0,1,0,3), (0,2,0,2), (0,0,2,2),
/// (1,1,1,1)); nullopt for every other event.
std::optional<double> p_indistinguishable_closed(const OccupationVector& s, double alpha,
                                                 double phi);

/// Transition amplitude <output| U |input> for photons sharing one internal
/// state, computed as perm(U[input rows, output cols]) / sqrt(prod in! prod out!).
Complex permanent_cross_check(const ComplexMatrix& u, const OccupationVector& input,
                              const OccupationVector& output);

/// Full pipeline for one configuration: Gram-Schmidt, input state,
/// evolution and detection.
EventDistribution simulate(const WavepacketSpec& spec, const ComplexMatrix& u,
                           InputTerms terms = InputTerms::kFull);
EventDistribution simulate(const FockState& input, const ComplexMatrix& u);

}  // namespace fourport
