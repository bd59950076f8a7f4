/*
   Copyright 2026 The hallzero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "hallzero/h0_algebra.hpp"
#include "hallzero/hall_polynomial.hpp"
#include "test_support.hpp"

namespace hallzero {
namespace {

Partition P(std::initializer_list<std::int64_t> parts) { return Partition::make(parts); }

IntPoly poly(std::initializer_list<int> c) {
  std::vector<Integer> v;
  for (int x : c) v.emplace_back(x);
  return IntPoly(v);
}

TEST(NStat, Examples) {
  EXPECT_EQ(n_stat(Partition::column(5)), 10);
  EXPECT_EQ(n_stat(Partition::row(7)), 0);
  EXPECT_EQ(n_stat(P({3, 1, 1})), 3);
  EXPECT_EQ(n_stat(Partition()), 0);
}

TEST(NStat, EqualsSumOverConjugate) {
  for (const auto& a : testing::partitions_up_to(10)) {
    std::int64_t s = 0;
    const auto conj = conjugate(a);
    for (auto c : conj.parts()) s += static_cast<std::int64_t>(c) * (c - 1) / 2;
    ASSERT_EQ(n_stat(a), s) << a;
  }
}

TEST(IntPoly, NormalizesAndEvaluates) {
  const IntPoly f = poly({-1, 0, 1, 0, 0});
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.coeffs().size(), 3u);
  EXPECT_EQ(f.evaluate(7), 48);
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_TRUE(poly({0, 0}).is_zero());
}

TEST(IntPoly, TextForm) {
  EXPECT_EQ(format(poly({-1, 0, 1})), "-1 + 0·t + 1·t^2");
  EXPECT_EQ(format(poly({1, 1})), "1 + 1·t");
  EXPECT_EQ(format(poly({2, -3, 0, 5})), "2 - 3·t + 0·t^2 + 5·t^3");
  EXPECT_EQ(format(IntPoly()), "0");
}

TEST(Lagrange, RecoversKnownPolynomial) {
  // 3 t^3 - t + 4 at four points
  std::vector<Integer> xs{2, 3, 5, 7};
  std::vector<Integer> ys;
  for (const auto& x : xs) ys.push_back(3 * x * x * x - x + 4);
  const auto c = lagrange_coefficients(xs, ys);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], 4);
  EXPECT_EQ(c[1], -1);
  EXPECT_EQ(c[2], 0);
  EXPECT_EQ(c[3], 3);
}

TEST(InterpolateHallPoly, Examples) {
  EXPECT_EQ(interpolate_hall_poly(P({1}), P({1}), P({1, 1})), poly({1, 1}));
  EXPECT_EQ(interpolate_hall_poly(P({3, 1}), Partition(), P({3, 1})), poly({1}));
  // t^2 - 1: counts 3, 8, 24 at p = 2, 3, 5 and 48 at p = 7
  const auto fit = interpolate_hall_poly_fit(P({2, 1}), P({2}), P({3, 1, 1}));
  EXPECT_EQ(fit.poly, poly({-1, 0, 1}));
  EXPECT_EQ(fit.degree_budget, 2);
  EXPECT_EQ(fit.samples, (std::vector<std::pair<int, std::uint64_t>>{{2, 3}, {3, 8}, {5, 24}}));
  EXPECT_EQ(fit.validation, (std::pair<int, std::uint64_t>{7, 48}));
  EXPECT_EQ(interpolate_hall_poly(Partition::column(3), Partition::column(2), P({2, 2, 1})),
            poly({1}));
}

TEST(InterpolateHallPoly, ZeroPolynomials) {
  // LR-impossible triple with nonnegative degree budget
  EXPECT_TRUE(interpolate_hall_poly(P({2}), P({2}), P({2, 1, 1})).is_zero());
  // negative degree budget: n(4) - n(2) - n(1,1) = -1
  const auto fit = interpolate_hall_poly_fit(P({2}), P({1, 1}), P({4}));
  EXPECT_TRUE(fit.poly.is_zero());
  EXPECT_EQ(fit.degree_budget, -1);
}

TEST(InterpolateHallPoly, Errors) {
  EXPECT_THROW(interpolate_hall_poly(P({1}), P({1}), P({3})), std::invalid_argument);
  // n(1^5) - n(1^3) - n(1^2) = 6 needs 8 primes
  EXPECT_THROW(interpolate_hall_poly(Partition::column(3), Partition::column(2), Partition::column(5)),
               Infeasible);
  EXPECT_FALSE(interpolation_feasible(Partition::column(3), Partition::column(2), Partition::column(5)));
  // weight 7 only admits p = 2, 3
  EXPECT_THROW(interpolate_hall_poly(P({4}), P({3}), P({5, 2})), Infeasible);
  EXPECT_TRUE(interpolation_feasible(P({2, 1}), P({2}), P({3, 1, 1})));
}

TEST(InterpolateHallPoly, CapsLimitAdmissiblePrimes) {
  // With large primes capped at weight 2, weight-3 triples only see p = 2, 3.
  HallOracle oracle(OracleCaps{8, 2});
  EXPECT_THROW(interpolate_hall_poly(P({1}), Partition::column(2), Partition::column(3), oracle),
               Infeasible);
  EXPECT_EQ(interpolate_hall_poly(P({1}), P({1}), P({2}), oracle), poly({1}));
}

TEST(ConstantTermViaInterpolation, Examples) {
  EXPECT_EQ(constant_term_via_interpolation(P({2, 1}), P({2}), P({4, 1})), 1);
  EXPECT_EQ(constant_term_via_interpolation(P({2, 1}), Partition::column(2), P({3, 2})), 1);
  EXPECT_EQ(constant_term_via_interpolation(P({2, 1}), Partition::column(2), P({2, 1, 1, 1})), 0);
}

TEST(HallPolyProperties, AgreesWithOracleAndAlgebraUpToWeightFour) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& g : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& a : partitions_of(n - k)) {
          for (const auto& b : partitions_of(k)) {
            if (!interpolation_feasible(a, b, g)) continue;
            const auto fit = interpolate_hall_poly_fit(a, b, g);
            for (const auto& [p, count] : fit.samples) ASSERT_EQ(fit.poly.evaluate(p), count);
            ASSERT_EQ(fit.poly.evaluate(fit.validation.first), fit.validation.second);
            ASSERT_EQ(fit.poly.coefficient(0), constant_term(a, b, g)) << a << b << g;
            ASSERT_EQ(fit.poly.is_zero(), hall_number(g, a, b, 2) == 0);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace hallzero
