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

#include <algorithm>
#include <set>

#include "hallzero/degeneration.hpp"
#include "hallzero/hall_oracle.hpp"
#include "hallzero/hall_polynomial.hpp"
#include "test_support.hpp"

namespace hallzero {
namespace {

Partition P(std::initializer_list<std::int64_t> parts) { return Partition::make(parts); }

Matrix block_diagonal(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  int start = 0;
  for (int s : sizes) {
    for (int i = 0; i + 1 < s; ++i) m[start + i][start + i + 1] = 1;
    start += s;
  }
  return m;
}

TEST(PrimeField, ArithmeticAndValidation) {
  const PrimeField f(7);
  EXPECT_EQ(f.mul(3, 5), 1);
  EXPECT_EQ(f.inv(3), 5);
  EXPECT_EQ(f.sub(2, 5), 4);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(17), std::invalid_argument);
}

TEST(JordanType, Examples) {
  const PrimeField f2(2);
  EXPECT_EQ(jordan_type(Matrix(3, std::vector<int>(3, 0)), f2), P({1, 1, 1}));
  EXPECT_EQ(jordan_type(block_diagonal({3}), f2), P({3}));
  EXPECT_EQ(jordan_type(block_diagonal({2, 2, 1}), f2), P({2, 2, 1}));
  EXPECT_EQ(jordan_type(Matrix{}, f2), Partition());
}

TEST(JordanType, RejectsNonNilpotentAndNonSquare) {
  const PrimeField f3(3);
  EXPECT_THROW(jordan_type(Matrix{{1, 0}, {0, 0}}, f3), std::invalid_argument);
  EXPECT_THROW(jordan_type(Matrix{{0, 1}}, f3), std::invalid_argument);
  // 3 * identity is zero mod 3, so nilpotent there
  EXPECT_EQ(jordan_type(Matrix{{3, 0}, {0, 3}}, f3), P({1, 1}));
}

TEST(JordanType, ConjugatedOperatorKeepsType) {
  // operators not in Jordan normal form
  const PrimeField f5(5);
  const Matrix conj{{0, 1, 4}, {0, 0, 1}, {0, 0, 0}};
  EXPECT_EQ(jordan_type(conj, f5), P({3}));
  const Matrix mixed{{1, 4, 0}, {1, 4, 0}, {0, 0, 0}};  // nilpotent rank one, square zero
  EXPECT_EQ(jordan_type(mixed, f5), P({2, 1}));
}

TEST(JordanModule, MatrixHasTheGivenType) {
  for (const auto& g : testing::partitions_up_to(7)) {
    const JordanModule m(g, PrimeField(3));
    EXPECT_EQ(jordan_type(m.matrix(), m.field()), g);
  }
}

TEST(JordanModule, CapsAreEnforced) {
  EXPECT_THROW(JordanModule(P({5, 4}), PrimeField(2)), CapExceeded);
  EXPECT_THROW(JordanModule(P({4, 3}), PrimeField(5)), CapExceeded);
  EXPECT_NO_THROW(JordanModule(P({4, 4}), PrimeField(3)));
  OracleCaps tight{3, 2};
  EXPECT_THROW(JordanModule(P({2, 2}), PrimeField(2), tight), CapExceeded);
}

TEST(InvariantSubspaces, Examples) {
  for (int p : {2, 3, 5}) {
    const auto subs = enumerate_invariant_subspaces(JordanModule(P({2}), PrimeField(p)));
    ASSERT_EQ(subs.size(), 3u);
    EXPECT_EQ(subs[1].basis[0][1], 1);  // the image of T is spanned by e_2
    EXPECT_EQ(subs[1].basis[0][0], 0);
  }
  EXPECT_EQ(enumerate_invariant_subspaces(JordanModule(Partition(), PrimeField(2))).size(), 1u);
  EXPECT_EQ(enumerate_invariant_subspaces(JordanModule(P({1, 1}), PrimeField(2))).size(), 5u);
}

TEST(InvariantSubspaces, PrunedEnumerationMatchesNaiveFilter) {
  for (int p : {2, 3, 5}) {
    for (const auto& g : testing::partitions_up_to(p == 5 ? 4 : 5)) {
      const JordanModule m(g, PrimeField(p));
      auto pruned = enumerate_invariant_subspaces(m);
      auto naive = testing::naive_invariant_subspaces(m);
      auto key = [](const Subspace& s) {
        std::vector<std::vector<int>> rows;
        for (const auto& r : s.basis) rows.emplace_back(r.begin(), r.end());
        return rows;
      };
      std::set<std::vector<std::vector<int>>> a;
      std::set<std::vector<std::vector<int>>> b;
      for (const auto& s : pruned) a.insert(key(s));
      for (const auto& s : naive) b.insert(key(s));
      EXPECT_EQ(a.size(), pruned.size()) << "duplicate subspace for " << g;
      EXPECT_EQ(a, b) << g << " p=" << p;
    }
  }
}

TEST(HallNumber, Examples) {
  EXPECT_EQ(hall_number(P({1, 1}), P({1}), P({1}), 2), 3u);
  for (int p : {2, 3, 5, 7}) EXPECT_EQ(hall_number(P({2}), P({1}), P({1}), p), 1u);
  EXPECT_EQ(hall_number(P({1, 1, 1}), P({1}), P({1, 1}), 2), 7u);
  EXPECT_EQ(hall_number(P({2, 1}), P({2}), P({2}), 2), 0u);  // weight mismatch
}

TEST(HallNumber, FrozenValues) {
  // Values from a separate brute-force enumeration over all subspaces.
  const std::vector<std::uint64_t> expected{3, 8, 24, 48};
  const std::vector<int> primes{2, 3, 5, 7};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    EXPECT_EQ(hall_number(P({3, 1, 1}), P({2, 1}), P({2}), primes[i]), expected[i]);
  }
}

TEST(HallNumber, CapExceeded) {
  EXPECT_THROW(hall_number(P({4, 3}), P({4}), P({3}), 5), CapExceeded);
  EXPECT_THROW(hall_number(P({9}), P({5}), P({4}), 2), CapExceeded);
  EXPECT_THROW(hall_number(P({1}), P({1}), Partition(), 4), std::invalid_argument);
}

TEST(HallNumber, EnumerationBudget) {
  OracleCaps caps;
  caps.max_subspaces = 10;
  HallOracle oracle(caps);
  // M(1^4) over F_2 has 35 two-dimensional subspaces
  EXPECT_THROW(oracle.hall_number(P({1, 1, 1, 1}), P({1, 1}), P({1, 1}), 2), CapExceeded);
  EXPECT_THROW(oracle.hall_number(P({1, 1, 1, 1}), P({1, 1}), P({1, 1}), 2), CapExceeded);
  EXPECT_EQ(oracle.hall_number(P({4}), P({2}), P({2}), 2), 1u);
  EXPECT_THROW(interpolate_hall_poly(P({1, 1}), P({1, 1}), P({1, 1, 1, 1}), oracle), Infeasible);
}

TEST(CountAllSubspaces, Examples) {
  EXPECT_EQ(count_all_subspaces(2, 2), 5u);
  EXPECT_EQ(count_all_subspaces(0, 2), 1u);
  EXPECT_EQ(count_all_subspaces(5, 2), 374u);
  EXPECT_THROW(count_all_subspaces(9, 2), CapExceeded);
}

TEST(CountAllSubspaces, MatchesGaussianBinomials) {
  for (int p : {2, 3, 5}) {
    for (int n = 0; n <= 5; ++n) {
      std::uint64_t expected = 0;
      for (int k = 0; k <= n; ++k) expected += testing::gaussian_binomial(n, k, p);
      EXPECT_EQ(count_all_subspaces(n, p), expected) << n << " " << p;
    }
  }
}

TEST(HallOracleProperties, TypesPartitionTheInvariantSubspaces) {
  HallOracle oracle;
  for (int p : {2, 3}) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& g : partitions_of(n)) {
        std::uint64_t total = 0;
        for (int k = 0; k <= n; ++k) {
          for (const auto& b : partitions_of(k)) {
            for (const auto& a : partitions_of(n - k)) total += oracle.hall_number(g, a, b, p);
          }
        }
        const JordanModule m(g, PrimeField(p));
        EXPECT_EQ(total, testing::naive_invariant_subspaces(m).size()) << g;
        EXPECT_EQ(total, oracle.count_invariant_subspaces(g, p));
      }
    }
  }
}

TEST(HallOracleProperties, TrivialSubmodules) {
  for (const auto& g : testing::partitions_up_to(6)) {
    EXPECT_EQ(hall_number(g, g, Partition(), 2), 1u);
    EXPECT_EQ(hall_number(g, Partition(), g, 2), 1u);
    EXPECT_EQ(hall_number(g, g, Partition(), 3), 1u);
  }
}

TEST(HallOracleProperties, SymmetryInAlphaBeta) {
  for (int p : {2, 3}) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& g : partitions_of(n)) {
        for (int k = 0; k <= n; ++k) {
          for (const auto& a : partitions_of(k)) {
            for (const auto& b : partitions_of(n - k)) {
              ASSERT_EQ(hall_number(g, a, b, p), hall_number(g, b, a, p)) << g << a << b;
            }
          }
        }
      }
    }
  }
}

TEST(HallOracleProperties, ZeroOperatorGivesGaussianBinomials) {
  for (int p : {2, 3}) {
    for (int n = 0; n <= 5; ++n) {
      for (int k = 0; k <= n; ++k) {
        EXPECT_EQ(hall_number(Partition::column(n), Partition::column(n - k), Partition::column(k), p),
                  testing::gaussian_binomial(n, k, p));
      }
    }
  }
}

TEST(HallOracleProperties, SubmoduleAndQuotientTypesMatchGenericJordanType) {
  // Restrict T to U and pass to V/U explicitly, then use the matrix routine.
  const PrimeField f(3);
  for (const auto& g : testing::partitions_up_to(4)) {
    const JordanModule m(g, f);
    const std::size_t n = m.dim();
    for (const auto& s : enumerate_invariant_subspaces(m)) {
      const std::size_t k = s.dim();
      // complete the echelon basis with unit vectors at non-pivot columns
      std::vector<Vec> basis = s.basis;
      for (std::size_t j = 0; j < n; ++j) {
        if (std::find(s.pivots.begin(), s.pivots.end(), j) == s.pivots.end()) {
          Vec e{};
          e[j] = 1;
          basis.push_back(e);
        }
      }
      // coordinates of T b_i in the completed basis, by brute force solve
      auto coords = [&](const Vec& v) {
        std::vector<int> c(n, 0);
        Vec rest = v;
        for (std::size_t r = 0; r < k; ++r) {
          const auto a = rest[s.pivots[r]];
          c[r] = a;
          for (std::size_t j = 0; j < n; ++j) rest[j] = f.sub(rest[j], f.mul(a, s.basis[r][j]));
        }
        std::size_t idx = k;
        for (std::size_t j = 0; j < n; ++j) {
          if (std::find(s.pivots.begin(), s.pivots.end(), j) == s.pivots.end()) c[idx++] = rest[j];
        }
        return c;
      };
      Matrix full(n, std::vector<int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        const auto c = coords(m.apply(basis[i]));
        for (std::size_t r = 0; r < n; ++r) full[r][i] = c[r];
      }
      Matrix sub(k, std::vector<int>(k, 0));
      Matrix quo(n - k, std::vector<int>(n - k, 0));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) sub[r][c] = full[r][c];
      for (std::size_t r = k; r < n; ++r)
        for (std::size_t c = k; c < n; ++c) quo[r - k][c - k] = full[r][c];
      EXPECT_EQ(submodule_type(m, s.basis), jordan_type(sub, f));
      EXPECT_EQ(quotient_type(m, s.basis), jordan_type(quo, f));
    }
  }
}

}  // namespace
}  // namespace hallzero
