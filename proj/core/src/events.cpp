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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fourport/engine.hpp"
#include "fourport/errors.hpp"

namespace fourport {

double EventDistribution::operator[](const OccupationVector& s) const {
  const auto it = std::find(events.begin(), events.end(), s);
  if (it == events.end()) throw std::out_of_range("event " + s.to_string() + " not in distribution");
  return probabilities[static_cast<std::size_t>(it - events.begin())];
}

double EventDistribution::total() const {
  double s = 0.0;
  for (double p : probabilities) s += p;
  return s;
}

Rational multinomial_probability(const OccupationVector& s) {
  if (s.modes() == 0) throw DimensionError("multinomial_probability: empty event");
  std::int64_t den = 1;
  for (int j = 0; j < s.total(); ++j) den *= static_cast<std::int64_t>(s.modes());
  for (int c : s.counts()) den *= factorial(c);
  return Rational(factorial(s.total()), den);
}

Rational p_distinguishable(const OccupationVector& s) {
  if (s.modes() != 4 || s.total() != 4)
    throw PhotonNumberError("p_distinguishable: expected four photons in four ports, got " +
                            s.to_string());
  return multinomial_probability(s);
}

std::optional<double> p_indistinguishable_closed(const OccupationVector& s, double alpha,
                                                 double phi) {
  if (s == OccupationVector{4, 0, 0, 0}) return std::pow(std::cos(phi / 2.0), 4) / 8.0;
  if (s == OccupationVector{0, 1, 0, 3}) return 0.0;
  if (s == OccupationVector{0, 2, 0, 2}) {
    const double a = std::cos(alpha) + std::cos(alpha + phi);
    return a * a / 48.0;
  }
  if (s == OccupationVector{0, 0, 2, 2}) {
    const double a = 1.0 - 3.0 * std::cos(2.0 * alpha + phi);
    return a * a / 48.0;
  }
  if (s == OccupationVector{1, 1, 1, 1}) {
    const double a = std::cos(alpha) - std::cos(alpha + phi);
    return a * a / 12.0;
  }
  return std::nullopt;
}

std::vector<OccupationVector> event_order(std::size_t n_modes, int n_photons) {
  auto events = enumerate_events(n_modes, n_photons);
  // Cross-multiplied comparison keeps the ordering exact; with at most
  // kMaxPhotons photons the products stay far below 2^63.
  std::stable_sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    const Rational pa = multinomial_probability(a);
    const Rational pb = multinomial_probability(b);
    const std::int64_t lhs = pa.numerator() * pb.denominator();
    const std::int64_t rhs = pb.numerator() * pa.denominator();
    if (lhs != rhs) return lhs < rhs;
    return a > b;
  });
  return events;
}

}  // namespace fourport
