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

#include "fourport/multiport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fourport/errors.hpp"

namespace fourport {

namespace {

double reduce_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

}  // namespace

MultiportUnitary build_four_port(double alpha, double phi) {
  MultiportUnitary out;
  out.alpha = reduce_angle(alpha);
  out.phi = reduce_angle(phi);
  const Complex e_phi = std::polar(0.5, out.phi);
  const Complex e_phi_alpha = std::polar(0.5, out.phi + out.alpha);
  const Complex e_alpha = std::polar(0.5, out.alpha);
  out.matrix = ComplexMatrix{
      {e_phi, e_phi, e_phi_alpha, e_phi_alpha},
      {0.5, 0.5, -e_alpha, -e_alpha},
      {0.5, -0.5, 0.5, -0.5},
      {0.5, -0.5, -0.5, 0.5},
  };
  return out;
}

ValidationReport validate(const ComplexMatrix& u, double tolerance) {
  if (!u.is_square() || u.rows() == 0) throw DimensionError("validate: matrix must be square");
  ValidationReport report;
  if (!u.all_finite()) {
    report.unitarity_deviation = report.hadamard_deviation = report.max_deviation =
        std::numeric_limits<double>::infinity();
    return report;
  }
  const ComplexMatrix gram = u * u.adjoint();
  report.unitarity_deviation = gram.max_abs_diff(ComplexMatrix::identity(u.rows()));

  const double target = 1.0 / std::sqrt(static_cast<double>(u.rows()));
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < u.cols(); ++c)
      report.hadamard_deviation =
          std::max(report.hadamard_deviation, std::abs(std::abs(u(r, c)) - target));

  report.max_deviation = std::max(report.unitarity_deviation, report.hadamard_deviation);
  report.unitary = report.unitarity_deviation <= tolerance;
  report.hadamard = report.hadamard_deviation <= tolerance;
  return report;
}

}  // namespace fourport
