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

#include "fourport/complex_matrix.hpp"

namespace fourport {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr std::size_t kPorts = 4;

/// Gaussian single-photon wavepackets, one per input port.
///
/// The spectral amplitude is exp(-(w - omega0)^2 / (2 delta_omega^2)) and the
/// photon in port j is delayed by times[j] = path_lengths[j] / c.
struct WavepacketSpec {
  double omega0 = 0.0;       // rad/s
  double delta_omega = 0.0;  // rad/s
  std::array<double, kPorts> times{};         // s
  std::array<double, kPorts> path_lengths{};  // m
  double coherence_length = 0.0;  // m; informational, 0 when not derived from a wavelength

  static WavepacketSpec from_times(double omega0, double delta_omega,
                                   const std::array<double, kPorts>& times);
  static WavepacketSpec from_path_lengths(double omega0, double delta_omega,
                                          const std::array<double, kPorts>& path_lengths);
};

/// Converts laboratory parameters to a spec. The intensity FWHM delta_lambda
/// maps to delta_omega = (2 pi c delta_lambda / lambda0^2) / (2 sqrt(ln 2));
/// the coherence length is lambda0^2 / delta_lambda.
/// Throws std::invalid_argument for non-positive wavelengths.
WavepacketSpec wavelength_to_spec(double lambda0, double delta_lambda_fwhm,
                                  const std::array<double, kPorts>& path_lengths);

double coherence_length(double lambda0, double delta_lambda_fwhm);

/// <psi_j|psi_k> = exp(i omega0 (t_k - t_j)) exp(-delta_omega^2 (t_j - t_k)^2 / 4).
/// Ports are 0-based.
Complex overlap(const WavepacketSpec& spec, std::size_t j, std::size_t k);

/// G(j, k) = <psi_k|psi_j>, so that G = L L^dagger when the rows of L hold
/// the expansion coefficients of each port's temporal state.
ComplexMatrix gram_matrix(const WavepacketSpec& spec);

/// Expansion of the four temporal states over an orthonormal internal basis.
///
/// coeffs(j, e) is the amplitude of internal label e in port j's state.
/// Basis vectors are created in port order 0..3, so coeffs is lower
/// triangular with a real non-negative pivot on each newly created column.
/// Ports whose state is already spanned (residual below kRankTolerance)
/// create no column; rank counts the columns in use and the remaining
/// columns are zero.
struct InternalExpansion {
  ComplexMatrix coeffs = ComplexMatrix(kPorts, kPorts);
  std::size_t rank = 0;
};

inline constexpr double kRankTolerance = 1e-12;

InternalExpansion gram_schmidt(const WavepacketSpec& spec);

/// Same factorization starting from an explicit Hermitian PSD Gram matrix.
InternalExpansion gram_schmidt(const ComplexMatrix& gram);

}  // namespace fourport
