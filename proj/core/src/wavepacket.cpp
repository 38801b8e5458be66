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

#include "fourport/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fourport/errors.hpp"

namespace fourport {

namespace {

void check_spectrum(double omega0, double delta_omega) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0))
    throw std::invalid_argument("omega0 must be positive and finite");
  if (!(delta_omega > 0.0) || !std::isfinite(delta_omega))
    throw std::invalid_argument("delta_omega must be positive and finite");
}

}  // namespace

WavepacketSpec WavepacketSpec::from_times(double omega0, double delta_omega,
                                          const std::array<double, kPorts>& times) {
  check_spectrum(omega0, delta_omega);
  WavepacketSpec spec;
  spec.omega0 = omega0;
  spec.delta_omega = delta_omega;
  spec.times = times;
  for (std::size_t j = 0; j < kPorts; ++j) spec.path_lengths[j] = times[j] * kSpeedOfLight;
  return spec;
}

WavepacketSpec WavepacketSpec::from_path_lengths(double omega0, double delta_omega,
                                                 const std::array<double, kPorts>& path_lengths) {
  check_spectrum(omega0, delta_omega);
  WavepacketSpec spec;
  spec.omega0 = omega0;
  spec.delta_omega = delta_omega;
  spec.path_lengths = path_lengths;
  for (std::size_t j = 0; j < kPorts; ++j) spec.times[j] = path_lengths[j] / kSpeedOfLight;
  return spec;
}

double coherence_length(double lambda0, double delta_lambda_fwhm) {
  if (!(lambda0 > 0.0) || !(delta_lambda_fwhm > 0.0))
    throw std::invalid_argument("wavelength and bandwidth must be positive");
  return lambda0 * lambda0 / delta_lambda_fwhm;
}

WavepacketSpec wavelength_to_spec(double lambda0, double delta_lambda_fwhm,
                                  const std::array<double, kPorts>& path_lengths) {
  const double lc = coherence_length(lambda0, delta_lambda_fwhm);
  const double omega0 = 2.0 * std::numbers::pi * kSpeedOfLight / lambda0;
  const double fwhm_omega =
      2.0 * std::numbers::pi * kSpeedOfLight * delta_lambda_fwhm / (lambda0 * lambda0);
  const double delta_omega = fwhm_omega / (2.0 * std::sqrt(std::numbers::ln2));
  auto spec = WavepacketSpec::from_path_lengths(omega0, delta_omega, path_lengths);
  spec.coherence_length = lc;
  return spec;
}

Complex overlap(const WavepacketSpec& spec, std::size_t j, std::size_t k) {
  if (j >= kPorts || k >= kPorts) throw DimensionError("overlap: port index out of range");
  const double dt = spec.times[k] - spec.times[j];
  const double envelope = std::exp(-0.25 * spec.delta_omega * spec.delta_omega * dt * dt);
  return std::polar(envelope, spec.omega0 * dt);
}

ComplexMatrix gram_matrix(const WavepacketSpec& spec) {
  ComplexMatrix g(kPorts, kPorts);
  for (std::size_t j = 0; j < kPorts; ++j)
    for (std::size_t k = 0; k < kPorts; ++k) g(j, k) = overlap(spec, k, j);
  return g;
}

InternalExpansion gram_schmidt(const WavepacketSpec& spec) { return gram_schmidt(gram_matrix(spec)); }

InternalExpansion gram_schmidt(const ComplexMatrix& gram) {
  if (!gram.is_square()) throw DimensionError("gram_schmidt: Gram matrix must be square");
  const std::size_t n = gram.rows();
  InternalExpansion out;
  out.coeffs = ComplexMatrix(n, n);
  auto& l = out.coeffs;
  // pivot_port[b] is the port whose residual created basis column b.
  std::vector<std::size_t> pivot_port;

  for (std::size_t j = 0; j < n; ++j) {
    double captured = 0.0;
    for (std::size_t b = 0; b < pivot_port.size(); ++b) {
      const std::size_t p = pivot_port[b];
      Complex v = gram(j, p);
      for (std::size_t c = 0; c < b; ++c) v -= l(j, c) * std::conj(l(p, c));
      l(j, b) = v / l(p, b).real();
      captured += std::norm(l(j, b));
    }
    const double residual = std::sqrt(std::max(0.0, gram(j, j).real() - captured));
    if (residual > kRankTolerance) {
      l(j, pivot_port.size()) = residual;
      pivot_port.push_back(j);
    }
  }
  out.rank = pivot_port.size();
  return out;
}

}  // namespace fourport
