// Copyright 2026 The bosind Authors
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

#include <map>
#include <unordered_set>

#include <Eigen/Dense>

#include "bosind/errors.hpp"
#include "bosind/symgroup.hpp"
#include "testing.hpp"

namespace bosind {
namespace {

using testing::expect_kind;

// Partition counts from the standard recurrence over the largest part.
long long partition_count(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
  }
  return p[static_cast<std::size_t>(n)];
}

TEST(Permutations, CountOrderAndUniqueness) {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = permutations(n);
    EXPECT_EQ(perms.size(), factorial(n));
    EXPECT_TRUE(perms.front().is_identity());
    std::unordered_set<Permutation, PermutationHash> seen(perms.begin(), perms.end());
    EXPECT_EQ(seen.size(), perms.size());
    EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
  }
}

TEST(Permutations, SignIsAHomomorphism) {
  const auto perms = permutations(4);
  for (const auto& p : perms) {
    for (const auto& q : perms) EXPECT_EQ((p * q).sign(), p.sign() * q.sign());
  }
}

TEST(Permutations, CompositionActsRightToLeft) {
  const auto p = Permutation::from_one_line({2, 3, 1});
  const auto q = Permutation::transposition(3, 1, 2);
  const auto pq = p * q;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(pq(i), p(q(i)));
  EXPECT_TRUE((p * p.inverse()).is_identity());
}

TEST(Permutations, CycleTypeAndClassSizes) {
  EXPECT_EQ(Permutation::cycle(4, {1, 3}).cycle_type(), Partition({2, 1, 1}));
  EXPECT_EQ(Permutation::cycle(5, {1, 2, 3}).sign(), 1);
  for (int n = 1; n <= 6; ++n) {
    std::map<CycleType, std::uint64_t> counted;
    for (const auto& p : permutations(n)) ++counted[p.cycle_type()];
    std::uint64_t total = 0;
    for (const auto& mu : partitions(n)) {
      EXPECT_EQ(counted[mu], class_size(mu)) << mu.str();
      EXPECT_EQ(class_representative(mu).cycle_type(), mu);
      total += class_size(mu);
    }
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(Permutations, Guards) {
  expect_kind(ErrorKind::Size, [] { permutations(9); });
  expect_kind(ErrorKind::Validation, [] { Permutation::from_one_line({1, 1, 2}); });
  expect_kind(ErrorKind::Validation, [] { Permutation::from_one_line({0, 1}); });
}

TEST(Partitions, CountsMatchRecurrence) {
  EXPECT_EQ(partitions(6).size(), 11u);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(static_cast<long long>(partitions(n).size()), partition_count(n));
}

TEST(Partitions, ReverseLexicographicFromSingleRow) {
  const auto p4 = partitions(4);
  const std::vector<Partition> expected{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                        Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
  EXPECT_EQ(p4, expected);
  for (const auto& lam : partitions(5, 2)) EXPECT_LE(lam.rows(), 2);
  EXPECT_EQ(partitions(5, 2).size(), 3u);
}

TEST(Partitions, Validation) {
  expect_kind(ErrorKind::Validation, [] { Partition({1, 2}); });
  expect_kind(ErrorKind::Validation, [] { Partition({2, 0}); });
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition({3, 1}).str(), "(3,1)");
}

TEST(HookDimension, SumOfSquaresIsGroupOrder) {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    for (const auto& lam : partitions(n)) sum += hook_dimension(lam) * hook_dimension(lam);
    EXPECT_EQ(sum, factorial(n)) << n;
  }
  EXPECT_EQ(hook_dimension(Partition({3, 2})), 5u);
  EXPECT_EQ(hook_dimension(Partition({4, 2, 1})), 35u);
}

TEST(HookDimension, EqualsNumberOfStandardTableaux) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions(n)) {
      const auto tableaux = standard_tableaux(lam);
      EXPECT_EQ(tableaux.size(), hook_dimension(lam)) << lam.str();
      for (const auto& t : tableaux) EXPECT_TRUE(t.is_standard());
    }
  }
}

// The 2-dimensional irrep of S_3 realised on the plane orthogonal to
// (1,1,1) inside the permutation representation on C^3.
TEST(Characters, TwoDimensionalIrrepOfS3FromExplicitMatrices) {
  Eigen::MatrixXd basis(3, 2);
  basis << 1, 1, -1, 1, 0, -2;
  basis.col(0).normalize();
  basis.col(1).normalize();
  for (const auto& p : permutations(3)) {
    Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(3, 3);
    for (int i = 0; i < 3; ++i) perm(p(i), i) = 1.0;
    const double chi = (basis.transpose() * perm * basis).trace();
    EXPECT_NEAR(chi, static_cast<double>(irrep_character(Partition({2, 1}), p.cycle_type())), 1e-12);
  }
}

TEST(Characters, RowOrthogonality) {
  for (int n = 2; n <= 7; ++n) {
    const auto shapes = partitions(n);
    for (const auto& a : shapes) {
      for (const auto& b : shapes) {
        long long sum = 0;
        for (const auto& mu : shapes) {
          sum += static_cast<long long>(class_size(mu)) * irrep_character(a, mu) * irrep_character(b, mu);
        }
        EXPECT_EQ(sum, a == b ? static_cast<long long>(factorial(n)) : 0) << a.str() << " " << b.str();
      }
    }
  }
}

TEST(Characters, IdentityClassGivesDimensionAndSignRep) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions(n)) {
      EXPECT_EQ(irrep_character(lam, Partition::single_column(n)), static_cast<long long>(hook_dimension(lam)));
    }
    for (const auto& p : permutations(n)) {
      EXPECT_EQ(irrep_character(Partition::single_column(n), p.cycle_type()), p.sign());
      EXPECT_EQ(irrep_character(Partition::single_row(n), p.cycle_type()), 1);
    }
  }
  expect_kind(ErrorKind::Shape, [] { irrep_character(Partition({2, 1}), Partition({2, 2})); });
}

TEST(TranspositionEigenvalue, KnownValues) {
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(transposition_eigenvalue(Partition::single_row(n)), Rational(1));
    EXPECT_EQ(transposition_eigenvalue(Partition::single_column(n)), Rational(-1));
    EXPECT_EQ(transposition_eigenvalue(Partition({n - 1, 1})), Rational(n - 3, n - 1));
  }
  expect_kind(ErrorKind::Domain, [] { transposition_eigenvalue(Partition({1})); });
}

// t_lambda equals chi_lambda(transposition) / d_lambda.
TEST(TranspositionEigenvalue, MatchesCharacterRatio) {
  for (int n = 2; n <= 8; ++n) {
    const Partition swap_class = Permutation::transposition(n, 1, 2).cycle_type();
    for (const auto& lam : partitions(n)) {
      const Rational ratio(irrep_character(lam, swap_class), static_cast<long long>(hook_dimension(lam)));
      EXPECT_EQ(transposition_eigenvalue(lam), ratio) << lam.str();
    }
  }
}

// Distinct shapes can share t_lambda from N = 6 on; (N-1,1) stays the
// second largest value, which is all the closed-form bound relies on.
TEST(TranspositionEigenvalue, CollisionsDoNotTouchTheTopTwo) {
  EXPECT_EQ(transposition_eigenvalue(Partition({4, 1, 1})), transposition_eigenvalue(Partition({3, 3})));
  for (int n = 3; n <= 10; ++n) {
    const Rational second = transposition_eigenvalue(Partition({n - 1, 1}));
    for (const auto& lam : partitions(n)) {
      if (lam.rows() == 1 || lam == Partition({n - 1, 1})) continue;
      EXPECT_LT(transposition_eigenvalue(lam), second) << lam.str();
    }
  }
}

TEST(YoungTableau, GroupsAndValidation) {
  const YoungTableau t({{1, 2}, {3}});
  EXPECT_EQ(t.row_group().size(), 2u);
  EXPECT_EQ(t.column_group().size(), 2u);
  EXPECT_FALSE(YoungTableau({{2, 1}, {3}}).is_standard());
  expect_kind(ErrorKind::Validation, [] { YoungTableau({{1, 2}, {2}}); });
  expect_kind(ErrorKind::Validation, [] { YoungTableau({{1}, {2, 3}}); });
  EXPECT_EQ(YoungTableau::row_reading(Partition({2, 1})).rows(), (std::vector<std::vector<int>>{{1, 2}, {3}}));
}

}  // namespace
}  // namespace bosind
