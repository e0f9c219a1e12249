// Copyright 2026 The qgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "qgeom/entropy.hpp"
#include "qgeom/random.hpp"

using namespace qgeom;

namespace {

// Brute-force Tsallis entropy in long double.
long double tsallis_oracle(long double q, const std::vector<double>& p) {
  long double s = 0.0L;
  if (q == 1.0L) {
    for (double x : p) if (x > 0) s -= x * std::log(static_cast<long double>(x));
    return s;
  }
  for (double x : p) if (x > 0) s += std::pow(static_cast<long double>(x), q);
  return (1.0L - s) / (q - 1.0L);
}

std::vector<double> random_probs(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  for (auto& x : w) x = rng.uniform(0.01, 1.0);
  const double s = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= s;
  return w;
}

const double kTwoRootTwoMinusOne = 2.0 * (std::sqrt(2.0) - 1.0);

}  // namespace

TEST(DiscreteDistribution, Validation) {
  EXPECT_NO_THROW(DiscreteDistribution({0.5, 0.5}));
  EXPECT_THROW(DiscreteDistribution({}), ValidationError);
  EXPECT_THROW(DiscreteDistribution({0.5, 0.6}), ValidationError);
  EXPECT_THROW(DiscreteDistribution({1.5, -0.5}), ValidationError);
  EXPECT_THROW(DiscreteDistribution({0.5, NAN}), ValidationError);
  try {
    DiscreteDistribution({0.5, 0.6});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("deficit"), std::string::npos);
  }
  // Within 1e-12 is accepted; not renormalized.
  const DiscreteDistribution d({0.5, 0.5 + 5e-13});
  EXPECT_EQ(d[1], 0.5 + 5e-13);
}

TEST(TsallisDiscrete, Examples) {
  for (double q : {0.3, 0.5, 1.0, 1.7}) EXPECT_EQ(tsallis_discrete(QParam(q), DiscreteDistribution({1.0, 0.0, 0.0})), 0.0);
  EXPECT_NEAR(tsallis_discrete(QParam(0.5), DiscreteDistribution({0.5, 0.5})), kTwoRootTwoMinusOne, 1e-15);
  for (int w : {2, 3, 10}) {
    const DiscreteDistribution u(std::vector<double>(w, 1.0 / w));
    EXPECT_NEAR(tsallis_discrete(QParam(1.0), u), std::log(w), 1e-14);
  }
}

TEST(TsallisDiscrete, ZeroEntriesAndNonPositiveQ) {
  const DiscreteDistribution d({0.5, 0.0, 0.5});
  EXPECT_NEAR(tsallis_discrete(QParam(0.5), d), kTwoRootTwoMinusOne, 1e-15);
  EXPECT_THROW(tsallis_discrete(QParam(0.0), d), DomainError);
  EXPECT_THROW(tsallis_discrete(QParam(-1.0), d), DomainError);
  // q = 0 without zeros: S_0 = W - 1.
  EXPECT_DOUBLE_EQ(tsallis_discrete(QParam(0.0), DiscreteDistribution({0.25, 0.25, 0.5})), 2.0);
}

TEST(TsallisDiscrete, MatchesOracleAndIsNonNegative) {
  Rng rng(21);
  for (double q : {0.1, 0.5, 0.9, 1.0, 1.3, 1.9}) {
    for (int i = 0; i < 200; ++i) {
      const auto p = random_probs(rng, 1 + rng.index(30));
      const double s = tsallis_discrete(QParam(q), DiscreteDistribution(p));
      EXPECT_NEAR(s, static_cast<double>(tsallis_oracle(q, p)), 1e-13);
      EXPECT_GE(s, -1e-15);
    }
  }
}

TEST(TsallisDiscrete, UniformIsMaximal) {
  Rng rng(22);
  for (double q : {0.2, 0.5, 0.8}) {
    const std::size_t w = 6;
    const double smax = tsallis_discrete(QParam(q), DiscreteDistribution(std::vector<double>(w, 1.0 / w)));
    for (int i = 0; i < 1000; ++i) {
      std::vector<double> p(w, 1.0 / w);
      const std::size_t a = rng.index(w), b = rng.index(w);
      const double eps = rng.uniform(0.0, 1.0 / w);
      p[a] -= eps;
      p[b] += eps;
      EXPECT_LE(tsallis_discrete(QParam(q), DiscreteDistribution(p)), smax + 1e-15);
    }
  }
}

TEST(TsallisDiscrete, BgsLimitIsLinearInOneMinusQ) {
  // |S_q - S_1| <= C |1 - q| near q = 1; C from the derivative sum p (log p)^2 / 2.
  const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  const DiscreteDistribution d(p);
  double c = 0.0;
  for (double x : p) c += 0.5 * x * std::log(x) * std::log(x);
  const double s1 = bgs_entropy(d);
  for (double q : {0.999, 0.9995, 0.9999, 1.0001, 1.0005, 1.001}) {
    EXPECT_LE(std::fabs(tsallis_discrete(QParam(q), d) - s1), 1.01 * c * std::fabs(1.0 - q)) << q;
  }
}

TEST(ProductDistribution, Examples) {
  const DiscreteDistribution b({0.2, 0.8});
  const auto id = product_distribution(DiscreteDistribution({1.0}), b);
  ASSERT_EQ(id.size(), 2u);
  EXPECT_EQ(id[0], 0.2);
  EXPECT_EQ(id[1], 0.8);
  const auto uu = product_distribution(DiscreteDistribution({0.5, 0.5}), DiscreteDistribution({0.5, 0.5}));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(uu[i], 0.25);
  const auto ab = product_distribution(DiscreteDistribution({0.3, 0.7}), b);
  const double want[] = {0.06, 0.24, 0.14, 0.56};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(ab[i], want[i]);
}

TEST(Composition, Examples) {
  const QParam p(0.5);
  const DiscreteDistribution u({0.5, 0.5});
  EXPECT_NEAR(tsallis_discrete(p, product_distribution(u, u)), 2.0, 1e-15);
  EXPECT_LT(check_composition(p, u, u), 1e-12);
  // q = 1: additivity.
  const DiscreteDistribution a({0.1, 0.9}), b({0.3, 0.3, 0.4});
  const QParam one(1.0);
  EXPECT_NEAR(check_composition(one, a, b),
              std::fabs(tsallis_discrete(one, product_distribution(a, b)) - tsallis_discrete(one, a) -
                        tsallis_discrete(one, b)),
              1e-16);
  EXPECT_LT(check_composition(one, a, b), 1e-14);
  // Degenerate factor.
  EXPECT_LT(check_composition(p, DiscreteDistribution({1.0}), b), 1e-15);
}

TEST(Composition, RandomPairs) {
  Rng rng(23);
  for (double q : {0.0, 0.25, 0.5, 0.75, 0.99}) {
    for (int i = 0; i < 500; ++i) {
      const DiscreteDistribution a(random_probs(rng, 1 + rng.index(12)));
      const DiscreteDistribution b(random_probs(rng, 1 + rng.index(12)));
      EXPECT_LT(check_composition(QParam(q), a, b), 1e-10);
    }
  }
}

TEST(QLog, Examples) {
  for (double q : {0.0, 0.5, 1.0, 1.5}) EXPECT_EQ(q_log(QParam(q), 1.0), 0.0);
  EXPECT_NEAR(q_log(QParam(0.5), 2.0), kTwoRootTwoMinusOne, 1e-15);
  EXPECT_NEAR(q_log(QParam(1.0), std::exp(1.0)), 1.0, 1e-15);
  EXPECT_THROW(q_log(QParam(0.5), 0.0), DomainError);
  EXPECT_THROW(q_log(QParam(0.5), -1.0), DomainError);
  // Definition (1 - x^{1-q})/(q-1) against direct evaluation.
  EXPECT_NEAR(q_log(QParam(0.3), 5.0), (1.0 - std::pow(5.0, 0.7)) / (0.3 - 1.0), 1e-14);
}

TEST(QLogRepresentation, Residuals) {
  EXPECT_LT(q_log_representation_residual(QParam(0.5), DiscreteDistribution({0.5, 0.5})), 1e-14);
  EXPECT_LT(q_log_representation_residual(QParam(0.5), DiscreteDistribution({1.0 - 1e-6, 1e-6})), 1e-12);
  EXPECT_LT(q_log_representation_residual(QParam(1.0), DiscreteDistribution({0.2, 0.3, 0.5})), 1e-15);
  EXPECT_THROW(q_log_representation_residual(QParam(0.5), DiscreteDistribution({1.0, 0.0})), DomainError);
}

TEST(DensityFunction, NormalizationChecked) {
  EXPECT_NO_THROW(DensityFunction([](double) { return 1.0; }, 0.0, 1.0));
  EXPECT_THROW(DensityFunction([](double) { return 2.0; }, 0.0, 1.0), ValidationError);
  EXPECT_THROW(DensityFunction([](double) { return 1.0; }, 1.0, 1.0), DomainError);
}

TEST(TsallisContinuous, Examples) {
  const DensityFunction u01([](double) { return 1.0; }, 0.0, 1.0);
  for (double q : {0.0, 0.5, 1.0, 1.5}) EXPECT_NEAR(tsallis_continuous(QParam(q), u01), 0.0, 1e-12);
  const DensityFunction u02([](double) { return 0.5; }, 0.0, 2.0);
  EXPECT_NEAR(tsallis_continuous(QParam(0.5), u02), kTwoRootTwoMinusOne, 1e-10);
}

TEST(TsallisContinuous, ShannonLimitMatchesHistogram) {
  // Triangular density on [0, 2]; differential entropy against a 10^4-bin histogram.
  const DensityFunction tri([](double x) { return x < 1.0 ? x : 2.0 - x; }, 0.0, 2.0);
  const double h = tsallis_continuous(QParam(1.0), tri);
  const int bins = 10000;
  const double w = 2.0 / bins;
  double hist = 0.0;
  for (int i = 0; i < bins; ++i) {
    const double lo = i * w, hi = lo + w;
    auto cdf = [](double x) { return x < 1.0 ? 0.5 * x * x : 1.0 - 0.5 * (2.0 - x) * (2.0 - x); };
    const double pm = cdf(hi) - cdf(lo);
    if (pm > 0) hist -= pm * std::log(pm);
  }
  hist += std::log(w);  // discrete entropy minus log(bin width)
  EXPECT_NEAR(h, hist, 1e-4);
  EXPECT_NEAR(h, 0.5, 1e-8);  // closed form of the triangular density on [0, 2]
}

TEST(TsallisContinuous, HistogramRefinementConsistency) {
  // S_q of the binned distribution approaches width^{q-1}-scaled continuous form.
  const double q = 0.7;
  const DensityFunction tri([](double x) { return x < 1.0 ? x : 2.0 - x; }, 0.0, 2.0);
  const double sc = tsallis_continuous(QParam(q), tri);
  const int bins = 4000;
  const double w = 2.0 / bins;
  double sum = 0.0;
  for (int i = 0; i < bins; ++i) {
    const double mid = (i + 0.5) * w;
    const double f = mid < 1.0 ? mid : 2.0 - mid;
    sum += std::pow(f, q) * w;
  }
  EXPECT_NEAR(sc, (1.0 - sum) / (q - 1.0), 1e-6);
}
