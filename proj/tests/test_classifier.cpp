// Copyright 2026 The symprep Authors
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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "symprep/classifier.hpp"

namespace symprep {
namespace {

std::vector<Complex> random_coefficients(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> c(static_cast<std::size_t>(n + 1));
  for (auto& z : c) z = Complex(gauss(rng), gauss(rng));
  return c;
}

// Symmetric state whose Majorana polynomial is prod_j (z - r_j), with
// `at_infinity` extra roots lowering the degree.
SymmetricCoefficients state_from_roots(const std::vector<Complex>& finite, int at_infinity) {
  const int n = static_cast<int>(finite.size()) + at_infinity;
  const auto poly = oracle::expand_roots(finite);
  std::vector<Complex> c(static_cast<std::size_t>(n + 1), Complex{});
  for (std::size_t k = 0; k < poly.size(); ++k) {
    c[k] = poly[k] / std::sqrt(static_cast<double>(oracle::choose(n, static_cast<int>(k))));
  }
  return SymmetricCoefficients(c);
}

// Random multiplicity pattern summing to n with clusters placed at random
// points of the plane (one cluster possibly at infinity).
struct Pattern {
  std::vector<int> multiplicities;
  SymmetricCoefficients state;
};

Pattern random_pattern(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit(-1.5, 1.5);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<int> mult;
  int left = n;
  while (left > 0) {
    std::uniform_int_distribution<int> take(1, left);
    mult.push_back(take(rng));
    left -= mult.back();
  }
  std::vector<Complex> finite;
  int infinite = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (i == 0 && coin(rng) == 0) {
      infinite = mult[i];
      continue;
    }
    const Complex z(unit(rng), unit(rng));
    for (int m = 0; m < mult[i]; ++m) finite.push_back(z);
  }
  std::sort(mult.rbegin(), mult.rend());
  return Pattern{mult, state_from_roots(finite, infinite)};
}

Eigen::Matrix2cd random_invertible(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix2cd a;
  do {
    for (int i = 0; i < 4; ++i) a(i / 2, i % 2) = Complex(gauss(rng), gauss(rng));
  } while (std::abs(a.determinant()) < 0.2);
  return a;
}

double smallest_separation(const std::vector<ExtendedRoot>& roots) {
  double best = 2.0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const double d = chordal_distance(roots[i], roots[j]);
      if (d > 1e-4) best = std::min(best, d);
    }
  }
  return best;
}

TEST(MajoranaRoots, ProductStates) {
  const auto top = majorana_roots(SymmetricCoefficients::basis(5, 5));
  ASSERT_EQ(top.size(), 5u);
  for (const auto& r : top) {
    EXPECT_FALSE(r.at_infinity);
    EXPECT_LT(std::abs(r.value), 1e-12);
  }
  const auto ground = majorana_roots(SymmetricCoefficients::basis(5, 0));
  ASSERT_EQ(ground.size(), 5u);
  for (const auto& r : ground) EXPECT_TRUE(r.at_infinity);
}

TEST(MajoranaRoots, GhzFourHasFourthRootsOfMinusOne) {
  const auto c = SymmetricCoefficients::from_real({1, 0, 0, 0, 1});
  const auto roots = majorana_roots(c);
  ASSERT_EQ(roots.size(), 4u);
  for (const auto& r : roots) {
    ASSERT_FALSE(r.at_infinity);
    EXPECT_NEAR(std::abs(std::pow(r.value, 4) + 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r.value), 1.0, 1e-12);
  }
  EXPECT_GT(smallest_separation(roots), 0.5);
}

TEST(MajoranaRoots, CountAlwaysEqualsN) {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(majorana_roots(SymmetricCoefficients(random_coefficients(rng, n))).size(), static_cast<std::size_t>(n));
    EXPECT_EQ(majorana_roots(SymmetricCoefficients::basis(n, n / 2)).size(), static_cast<std::size_t>(n));
  }
}

TEST(MajoranaRoots, PolynomialConvention) {
  const auto a = majorana_coefficients(SymmetricCoefficients::basis(4, 2));
  EXPECT_NEAR(std::abs(a[2] - std::sqrt(6.0)), 0.0, 1e-14);
}

TEST(DegeneracyConfig, ReferenceClasses) {
  EXPECT_EQ(classify(SymmetricCoefficients::basis(4, 0)).config.multiplicities, std::vector<int>({4}));
  EXPECT_EQ(classify(SymmetricCoefficients::basis(4, 1)).config.multiplicities, std::vector<int>({3, 1}));
  EXPECT_EQ(classify(SymmetricCoefficients::basis(4, 2)).config.multiplicities, std::vector<int>({2, 2}));
  EXPECT_EQ(classify(SymmetricCoefficients::from_real({1, 0, 0, 0, 1})).config.multiplicities,
            std::vector<int>({1, 1, 1, 1}));
  EXPECT_EQ(degeneracy_config(majorana_roots(SymmetricCoefficients::basis(4, 1))).multiplicities,
            std::vector<int>({3, 1}));
}

TEST(DegeneracyConfig, Labels) {
  const Classification g = classify(SymmetricCoefficients::basis(4, 0));
  EXPECT_EQ(g.label, "D_{4}, separable");
  EXPECT_TRUE(g.config.separable());
  EXPECT_EQ(classify(SymmetricCoefficients::basis(4, 1)).label, "D_{3,1}");
  EXPECT_EQ(g.config.num_qubits(), 4);
}

TEST(DegeneracyConfig, NearThresholdIsMarginal) {
  const SymmetricCoefficients c = state_from_roots({Complex(0.3, 0.2), Complex(0.3 + 3e-5, 0.2), Complex(-0.7, 0.1)}, 0);
  EXPECT_TRUE(classify(c).config.marginal);
  EXPECT_FALSE(classify(SymmetricCoefficients::from_real({1, 0, 0, 0, 1})).config.marginal);
}

TEST(DegeneracyConfig, DesignedPatternsAreRecovered) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const Pattern p = random_pattern(rng, n);
    if (smallest_separation(majorana_roots(p.state)) < 1e-2) continue;
    EXPECT_EQ(classify(p.state).config.multiplicities, p.multiplicities) << "trial " << trial;
  }
}

TEST(MultipleRootDistance, DetectsMultiplicity) {
  const SymmetricCoefficients d42 = SymmetricCoefficients::basis(4, 2);
  EXPECT_LT(multiple_root_distance(d42, ExtendedRoot{0.0, false}, 2), 1e-14);
  EXPECT_GT(multiple_root_distance(d42, ExtendedRoot{0.0, false}, 3), 1e-3);
  EXPECT_LT(multiple_root_distance(d42, ExtendedRoot{0.0, true}, 2), 1e-14);
}

TEST(CoefficientsFromRoots, KnownRootSets) {
  const auto top = coefficients_from_roots(std::vector<ExtendedRoot>(4, ExtendedRoot{0.0, false}), 4);
  EXPECT_NEAR(std::abs(top[4]), 1.0, 1e-14);
  std::vector<ExtendedRoot> quartic;
  for (int j = 0; j < 4; ++j) quartic.push_back(ExtendedRoot{std::polar(1.0, kPi * (2 * j + 1) / 4.0), false});
  const auto ghz = coefficients_from_roots(quartic, 4);
  EXPECT_NEAR(oracle::overlap(ghz.values(), SymmetricCoefficients::from_real({1, 0, 0, 0, 1}).values()), 1.0, 1e-12);
  EXPECT_THROW(coefficients_from_roots(quartic, 5), std::invalid_argument);
}

TEST(CoefficientsFromRoots, RoundTripOnRandomStates) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 10;
    const SymmetricCoefficients c(random_coefficients(rng, n));
    const auto back = coefficients_from_roots(majorana_roots(c), n);
    EXPECT_GE(oracle::overlap(c.values(), back.values()), 1.0 - 1e-8) << "N=" << n;
  }
}

TEST(CoefficientsFromRoots, MatchesDirectVietaExpansion) {
  std::mt19937_64 rng(44);
  std::normal_distribution<double> gauss;
  std::vector<Complex> roots(5);
  for (auto& z : roots) z = Complex(gauss(rng), gauss(rng));
  std::vector<ExtendedRoot> extended;
  for (const auto& z : roots) extended.push_back(ExtendedRoot{z, false});
  extended.push_back(ExtendedRoot{0.0, true});
  EXPECT_NEAR(oracle::overlap(coefficients_from_roots(extended, 6).values(), state_from_roots(roots, 1).values()), 1.0,
              1e-12);
}

TEST(Classify, InvariantUnderPhaseAndScale) {
  std::mt19937_64 rng(45);
  const auto raw = random_coefficients(rng, 5);
  std::vector<Complex> scaled = raw;
  for (auto& z : scaled) z *= std::polar(3.0, 1.1);
  const Classification a = classify(SymmetricCoefficients(raw));
  const Classification b = classify(SymmetricCoefficients(scaled));
  EXPECT_EQ(a.config.multiplicities, b.config.multiplicities);
  for (std::size_t i = 0; i < a.roots.size(); ++i) EXPECT_LT(chordal_distance(a.roots[i], b.roots[i]), 1e-10);
}

TEST(Classify, MoebiusCovarianceOfRoots) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const SymmetricCoefficients c(random_coefficients(rng, n));
    const Eigen::Matrix2cd a = random_invertible(rng);
    const auto image = majorana_roots(apply_symmetric_operation(c, a));
    for (const auto& r : majorana_roots(c)) {
      const ExtendedRoot moved = moebius_image(r, a);
      double best = 2.0;
      for (const auto& s : image) best = std::min(best, chordal_distance(moved, s));
      EXPECT_LT(best, 1e-8) << "trial " << trial;
    }
  }
}

TEST(Classify, ConfigInvariantUnderSymmetricSlocc) {
  std::mt19937_64 rng(47);
  int checked = 0;
  while (checked < 100) {
    const int n = 2 + checked % 5;
    const Pattern p = random_pattern(rng, n);
    const auto roots = majorana_roots(p.state);
    if (smallest_separation(roots) < 1e-2) continue;
    const Eigen::Matrix2cd a = random_invertible(rng);
    std::vector<ExtendedRoot> moved;
    for (const auto& r : roots) moved.push_back(moebius_image(r, a));
    if (smallest_separation(moved) < 1e-3) continue;
    EXPECT_EQ(classify(apply_symmetric_operation(p.state, a)).config.multiplicities, p.multiplicities);
    ++checked;
  }
}

TEST(Classify, LocalUnitaryMapsProductStateToProductState) {
  Eigen::Matrix2cd hadamard;
  hadamard << 1.0, 1.0, 1.0, -1.0;
  hadamard /= std::sqrt(2.0);
  const SymmetricCoefficients plus = apply_symmetric_operation(SymmetricCoefficients::basis(4, 0), hadamard);
  const auto expected = oracle::symmetric_state(plus.values());
  for (Eigen::Index i = 0; i < expected.size(); ++i) EXPECT_NEAR(std::abs(expected[i]), 0.25, 1e-14);
  EXPECT_EQ(classify(plus).config.multiplicities, std::vector<int>({4}));
}

}  // namespace
}  // namespace symprep
