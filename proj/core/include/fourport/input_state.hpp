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

#include "fourport/fock_state.hpp"
#include "fourport/wavepacket.hpp"

namespace fourport {

enum class InputTerms {
  kFull,            // quadruplet plus both double-twin components, equal weights
  kQuadrupletOnly,  // one photon per port, normalized on its own
};

/// Four-photon down-conversion state
///
///   1/sqrt(3) [ a1 a2 a3 a4 + a1^2 a2^2 / 2 + a3^2 a4^2 / 2 ] |0>
///
/// where aj is port j's creation operator for its temporal state, expanded
/// over the internal basis as sum_e coeffs(j, e) a_{j,e}. The result lives
/// on 4 spatial x max(rank, 1) internal modes and has unit norm: the three
/// components occupy disjoint sets of ports and are orthogonal.
FockState build_input_state(const InternalExpansion& expansion,
                            InputTerms terms = InputTerms::kFull);

}  // namespace fourport
