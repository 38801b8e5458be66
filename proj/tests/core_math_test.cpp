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
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fourport/errors.hpp"
#include "fourport/occupation.hpp"
#include "fourport/permanent.hpp"
#include "fourport/rational.hpp"
#include "test_support.hpp"

namespace fourport {
namespace {

TEST(Permanent, Identity) {
  EXPECT_NEAR(std::abs(permanent(ComplexMatrix::identity(4)) - Complex(1.0)), 0.0, 1e-15);
}

TEST(Permanent, AllOnesIsFactorial) {
  const ComplexMatrix ones{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  EXPECT_NEAR(std::abs(permanent(ones) - Complex(6.0)), 0.0, 1e-14);
}

TEST(Permanent, TwoByTwo) {
  const ComplexMatrix m{{1, 2}, {3, 4}};
  EXPECT_NEAR(std::abs(permanent(m) - Complex(10.0)), 0.0, 1e-14);
}

TEST(Permanent, OneByOneAndEmpty) {
  EXPECT_EQ(permanent(ComplexMatrix{{Complex(2.0, -1.0)}}), Complex(2.0, -1.0));
  EXPECT_EQ(permanent(ComplexMatrix()), Complex(1.0));
}

TEST(Permanent, RejectsNonSquareAndOversized) {
  EXPECT_THROW(permanent(ComplexMatrix(3, 4)), DimensionError);
  EXPECT_THROW(permanent(ComplexMatrix(21, 21)), DimensionError);
}

TEST(Permanent, MatchesPermutationSumOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto m = testing::random_matrix(n, rng);
      const Complex expected = testing::brute_force_permanent(m);
      EXPECT_NEAR(std::abs(permanent(m) - expected), 0.0, 1e-10 * (1.0 + std::abs(expected)))
          << "n=" << n;
    }
  }
}

TEST(Permanent, InvariantUnderRowAndColumnPermutations) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_matrix(4, rng);
    std::vector<std::size_t> rp{0, 1, 2, 3}, cp{0, 1, 2, 3};
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    EXPECT_NEAR(std::abs(permanent(permute(m, rp, cp)) - permanent(m)), 0.0, 1e-11);
  }
}

TEST(Permanent, MultilinearInRows) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> pick(0, 3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    auto m = testing::random_matrix(4, rng);
    const Complex before = permanent(m);
    const std::size_t r = pick(rng);
    const Complex c(g(rng), g(rng));
    for (std::size_t k = 0; k < 4; ++k) m(r, k) *= c;
    EXPECT_NEAR(std::abs(permanent(m) - c * before), 0.0, 1e-11 * (1.0 + std::abs(c * before)));
  }
}

TEST(EnumerateEvents, FourPhotonsInFourModes) {
  EXPECT_EQ(enumerate_events(4, 4).size(), 35u);
  EXPECT_EQ(enumerate_events(4, 2).size(), 10u);
}

TEST(EnumerateEvents, SingleModeAndZeroParticles) {
  const auto one = enumerate_events(1, 3);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], OccupationVector{3});
  const auto zero = enumerate_events(4, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], (OccupationVector{0, 0, 0, 0}));
}

TEST(EnumerateEvents, CountMatchesBinomialNoDuplicatesAndTotals) {
  auto binom = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (std::size_t modes = 1; modes <= 5; ++modes) {
    for (int photons = 0; photons <= 6; ++photons) {
      const auto events = enumerate_events(modes, photons);
      EXPECT_EQ(static_cast<long long>(events.size()),
                binom(photons + static_cast<int>(modes) - 1, static_cast<int>(modes) - 1));
      std::set<OccupationVector> unique(events.begin(), events.end());
      EXPECT_EQ(unique.size(), events.size());
      for (const auto& e : events) {
        EXPECT_EQ(e.total(), photons);
        EXPECT_EQ(e.modes(), modes);
      }
    }
  }
}

TEST(EnumerateEvents, RejectsZeroModes) { EXPECT_THROW(enumerate_events(0, 1), DimensionError); }

TEST(MultinomialNorm, Examples) {
  EXPECT_DOUBLE_EQ(multinomial_norm({1, 1, 1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(multinomial_norm({4, 0, 0, 0}), std::sqrt(24.0));
  EXPECT_DOUBLE_EQ(multinomial_norm({2, 2, 0, 0}), 2.0);
}

TEST(OccupationVector, RejectsNegativeCountsAndExcessPhotons) {
  EXPECT_THROW(OccupationVector({1, -1}), PhotonNumberError);
  EXPECT_THROW(OccupationVector({5, 4}), PhotonNumberError);
  EXPECT_NO_THROW(OccupationVector({4, 4}));
}

TEST(OccupationVector, ToString) { EXPECT_EQ(OccupationVector({0, 1, 0, 3}).to_string(), "(0,1,0,3)"); }

TEST(Rational, ReducesAndAdds) {
  EXPECT_EQ(Rational(24, 256), Rational(3, 32));
  EXPECT_EQ(Rational(1, -2).numerator(), -1);
  EXPECT_EQ(Rational(1, 4) + Rational(1, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, 128).to_string(), "3/128");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

}  // namespace
}  // namespace fourport
