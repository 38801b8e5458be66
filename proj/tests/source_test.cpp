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

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "fourport/input_state.hpp"
#include "fourport/setting_weights.hpp"
#include "fourport/wavepacket.hpp"
#include "test_support.hpp"

namespace fourport {
namespace {

constexpr double kPi = std::numbers::pi;

// 780 nm carrier with a 5 nm bandwidth.
WavepacketSpec lab_times(const std::array<double, 4>& t) {
  const auto base = wavelength_to_spec(780e-9, 5e-9, {0, 0, 0, 0});
  return WavepacketSpec::from_times(base.omega0, base.delta_omega, t);
}

std::array<double, 4> random_times(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(rng), d(rng), d(rng), d(rng)};
}

OccupationVector occupy(const FockState& state, std::initializer_list<std::pair<int, int>> modes) {
  std::vector<int> counts(state.mode_count(), 0);
  for (auto [port, label] : modes) ++counts[state.mode_index(port, label)];
  return OccupationVector(counts);
}

TEST(Overlap, EqualTimesGiveOne) {
  const auto spec = lab_times({1e-13, 1e-13, 0, 0});
  EXPECT_NEAR(std::abs(overlap(spec, 0, 1) - Complex(1.0)), 0.0, 1e-15);
}

TEST(Overlap, ModulusAtRootTwoOverWidth) {
  const auto base = lab_times({0, 0, 0, 0});
  const double dt = std::sqrt(2.0) / base.delta_omega;
  const auto spec = lab_times({0, dt, 0, 0});
  EXPECT_NEAR(std::norm(overlap(spec, 0, 1)), std::exp(-1.0), 1e-14);
}

TEST(Overlap, PhaseMatchesQuadrature) {
  // Scaled-down carrier keeps the quadrature well resolved.
  const double w0 = 40.0, dw = 1.0;
  for (auto [tj, tk] : {std::pair{0.0, 0.3}, std::pair{-0.7, 1.1}, std::pair{2.0, 0.5}}) {
    const auto spec = WavepacketSpec::from_times(w0, dw, {tj, tk, 0, 0});
    const Complex expected = testing::quadrature_overlap(w0, dw, tj, tk);
    EXPECT_NEAR(std::abs(overlap(spec, 0, 1) - expected), 0.0, 1e-9) << tj << " " << tk;
  }
}

TEST(Overlap, ConjugateSymmetric) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto spec = lab_times(random_times(rng, 5e-13));
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        EXPECT_NEAR(std::abs(overlap(spec, j, k) - std::conj(overlap(spec, k, j))), 0.0, 1e-15);
  }
}

TEST(GramMatrix, HermitianPositiveSemidefinite) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gram_matrix(lab_times(random_times(rng, 1e-12)));
    Eigen::Matrix4cd m;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m(j, k) = g(j, k);
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m);
    EXPECT_GE(solver.eigenvalues().minCoeff(), -1e-12);
  }
}

TEST(GramSchmidt, EqualTimesCollapseToOneColumn) {
  const auto ex = gram_schmidt(lab_times({0, 0, 0, 0}));
  EXPECT_EQ(ex.rank, 1u);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(std::abs(ex.coeffs(j, 0) - Complex(1.0)), 0.0, 1e-12);
    for (std::size_t e = 1; e < 4; ++e) EXPECT_EQ(ex.coeffs(j, e), Complex(0.0));
  }
}

TEST(GramSchmidt, FarSeparatedTimesGiveIdentity) {
  const auto ex = gram_schmidt(lab_times({0, 1e-11, 2e-11, 3e-11}));
  EXPECT_EQ(ex.rank, 4u);
  EXPECT_LT(ex.coeffs.max_abs_diff(ComplexMatrix::identity(4)), 1e-12);
}

TEST(GramSchmidt, TwoVectorRealOverlap) {
  ComplexMatrix g = ComplexMatrix::identity(4);
  const double c = 0.6;
  g(0, 1) = g(1, 0) = c;
  const auto ex = gram_schmidt(g);
  EXPECT_NEAR(std::abs(ex.coeffs(1, 0) - Complex(c)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ex.coeffs(1, 1) - Complex(std::sqrt(1 - c * c))), 0.0, 1e-15);
  EXPECT_EQ(ex.coeffs(1, 2), Complex(0.0));
  EXPECT_EQ(ex.coeffs(1, 3), Complex(0.0));
}

TEST(GramSchmidt, ReproducesGramAndKeepsConventions) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto spec = lab_times(random_times(rng, 5e-13));
    const auto ex = gram_schmidt(spec);
    EXPECT_LT((ex.coeffs * ex.coeffs.adjoint()).max_abs_diff(gram_matrix(spec)), 1e-12);
    for (std::size_t j = 0; j < 4; ++j) {
      double norm = 0.0;
      for (std::size_t e = 0; e < 4; ++e) {
        norm += std::norm(ex.coeffs(j, e));
        if (e > j) {
          EXPECT_EQ(ex.coeffs(j, e), Complex(0.0));
        }
      }
      EXPECT_NEAR(norm, 1.0, 1e-12);
      EXPECT_EQ(ex.coeffs(j, j).imag(), 0.0);
      EXPECT_GE(ex.coeffs(j, j).real(), 0.0);
    }
  }
}

TEST(GramSchmidt, PairCoincidenceReducesRank) {
  const auto ex = gram_schmidt(lab_times({0, 0, 3e-13, 3e-13}));
  EXPECT_EQ(ex.rank, 2u);
}

TEST(BuildInputState, CoincidentQuadrupletOnly) {
  const auto state = build_input_state(gram_schmidt(lab_times({0, 0, 0, 0})),
                                       InputTerms::kQuadrupletOnly);
  ASSERT_EQ(state.size(), 1u);
  EXPECT_EQ(state.internal_modes(), 1u);
  EXPECT_NEAR(std::abs(state.amplitude(OccupationVector{1, 1, 1, 1}) - Complex(1.0)), 0.0, 1e-12);
}

TEST(BuildInputState, DistinguishableLimitUsesDistinctLabels) {
  const auto state = build_input_state(gram_schmidt(lab_times({0, 1e-11, 2e-11, 3e-11})));
  EXPECT_EQ(state.size(), 3u);
  const double q = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(std::abs(state.amplitude(occupy(state, {{0, 0}, {1, 1}, {2, 2}, {3, 3}})) - q), 0.0,
              1e-12);
  // a^dagger^2 |0> = sqrt(2) |2>, so each double-twin amplitude is q/2 * 2.
  EXPECT_NEAR(std::abs(state.amplitude(occupy(state, {{0, 0}, {0, 0}, {1, 1}, {1, 1}})) - q), 0.0,
              1e-12);
  EXPECT_NEAR(std::abs(state.amplitude(occupy(state, {{2, 2}, {2, 2}, {3, 3}, {3, 3}})) - q), 0.0,
              1e-12);
}

TEST(BuildInputState, UnitNormForRandomTimes) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ex = gram_schmidt(lab_times(random_times(rng, 5e-13)));
    EXPECT_NEAR(build_input_state(ex).norm_squared(), 1.0, 1e-10);
    EXPECT_NEAR(build_input_state(ex, InputTerms::kQuadrupletOnly).norm_squared(), 1.0, 1e-10);
  }
}

TEST(BuildInputState, EveryKeyHoldsFourPhotons) {
  std::mt19937_64 rng(25);
  const auto state = build_input_state(gram_schmidt(lab_times(random_times(rng, 3e-13))));
  for (const auto& [key, amp] : state.amplitudes()) EXPECT_EQ(key.photons(), 4);
}

TEST(SettingWeights, CoincidentIsFullyIndistinguishable) {
  const auto w = setting_weights(gram_schmidt(lab_times({0, 0, 0, 0})));
  EXPECT_NEAR(w[parse_pattern("{1,1,1,1}")], 1.0, 1e-12);
  EXPECT_NEAR(w.total(), 1.0, 1e-12);
}

TEST(SettingWeights, FarSeparatedIsFullyDistinguishable) {
  const auto w = setting_weights(gram_schmidt(lab_times({0, 1e-11, 2e-11, 3e-11})));
  EXPECT_NEAR(w[parse_pattern("{1,2,3,4}")], 1.0, 1e-12);
}

TEST(SettingWeights, PairCoincidentDominatedByFirstPair) {
  const auto w = setting_weights(gram_schmidt(lab_times({0, 0, 1e-11, 2e-11})));
  EXPECT_EQ(to_display(w.dominant()), "{1,1,3,4}");
  EXPECT_GT(w[parse_pattern("{1,1,3,4}")], 0.99);
}

TEST(SettingWeights, SumToOneAndNonNegative) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = setting_weights(gram_schmidt(lab_times(random_times(rng, 5e-13))));
    EXPECT_NEAR(w.total(), 1.0, 1e-10);
    for (const auto& [pattern, value] : w.weights) EXPECT_GE(value, 0.0);
  }
}

TEST(SettingWeights, AgreeWithSampledWavefunctionExpansion) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    // Scaled-down carrier and width so the sampled grid resolves the fringes.
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    const auto spec = WavepacketSpec::from_times(30.0, 1.0, {d(rng), d(rng), d(rng), d(rng)});
    const auto oracle = testing::enumerate_setting_weights(testing::sampled_expansion(spec));
    const auto w = setting_weights(gram_schmidt(spec));
    double oracle_total = 0.0;
    for (const auto& [key, value] : oracle) {
      EXPECT_NEAR(w[parse_pattern(key)], value, 1e-6) << key;
      oracle_total += value;
    }
    EXPECT_NEAR(oracle_total, 1.0, 1e-6);
  }
}

TEST(SettingWeights, FullyIndistinguishableWeightFallsAsOnePortDetunes) {
  const auto base = lab_times({0, 0, 0, 0});
  const double step = 0.05 / base.delta_omega;
  for (std::size_t port = 0; port < 4; ++port) {
    double previous = 2.0;
    for (int i = 0; i <= 80; ++i) {
      std::array<double, 4> t{0, 0, 0, 0};
      t[port] = i * step;
      const double w = setting_weights(gram_schmidt(lab_times(t)))[parse_pattern("(1,1,1,1)")];
      EXPECT_LE(w, previous + 1e-12) << "port " << port << " step " << i;
      previous = w;
    }
  }
}

TEST(SettingPatterns, CanonicalFormsAndDisplay) {
  EXPECT_EQ(all_setting_patterns().size(), 15u);
  EXPECT_EQ(to_display(all_setting_patterns().front()), "{1,1,1,1}");
  EXPECT_EQ(to_display(all_setting_patterns().back()), "{1,2,3,4}");
  const std::array<std::size_t, 4> labels{3, 3, 0, 7};
  EXPECT_EQ(to_display(canonical_pattern(labels)), "{1,1,3,4}");
  EXPECT_EQ(parse_pattern("{1,1,3,4}"), parse_pattern("(1,1,2,3)"));
  EXPECT_EQ(to_display(parse_pattern("(1,2,1,2)")), "{1,2,1,2}");
  EXPECT_THROW(parse_pattern("{1,2}"), std::invalid_argument);
}

TEST(WavelengthToSpec, LabParameters) {
  const auto spec = wavelength_to_spec(780e-9, 5e-9, {0, 30e-6, 0, 0});
  EXPECT_NEAR(spec.coherence_length, 121.68e-6, 1e-10);
  EXPECT_NEAR(spec.omega0, 2 * kPi * kSpeedOfLight / 780e-9, 1e3);
  EXPECT_NEAR(spec.omega0 / 2.41495e15, 1.0, 1e-5);
  const double dw = 2 * kPi * kSpeedOfLight * 5e-9 / (780e-9 * 780e-9) / (2 * std::sqrt(std::log(2.0)));
  EXPECT_NEAR(spec.delta_omega / dw, 1.0, 1e-14);
  EXPECT_NEAR(spec.times[1] * kSpeedOfLight, 30e-6, 1e-18);
}

TEST(WavelengthToSpec, HalvingBandwidthDoublesCoherenceLength) {
  EXPECT_NEAR(coherence_length(780e-9, 2.5e-9), 2 * coherence_length(780e-9, 5e-9), 1e-15);
}

TEST(WavelengthToSpec, RejectsNonPositiveInputs) {
  EXPECT_THROW(wavelength_to_spec(0.0, 5e-9, {}), std::invalid_argument);
  EXPECT_THROW(wavelength_to_spec(780e-9, -1e-9, {}), std::invalid_argument);
}

}  // namespace
}  // namespace fourport
