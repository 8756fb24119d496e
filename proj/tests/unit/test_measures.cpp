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

#include <algorithm>
#include <random>

#include "bosind/measures.hpp"
#include "bosind/states.hpp"
#include "bosind/tensor_rep.hpp"
#include "testing.hpp"

namespace bosind {
namespace {

using testing::expect_kind;

Povm random_povm(const Space& space, int outcomes, std::mt19937_64& rng) {
  std::vector<Matrix> g;
  Matrix s = Matrix::Zero(space.idim(), space.idim());
  for (int k = 0; k < outcomes; ++k) {
    const Matrix a = linalg::ginibre(space.idim(), space.idim(), rng);
    g.push_back(a * a.adjoint());
    s += g.back();
  }
  const Matrix w = linalg::inv_sqrt_pd(s);
  Povm out;
  for (const auto& gk : g) out.push_back(w * gk * w);
  return out;
}

double p_symmetric_weight(const InvariantState& rho) {
  const auto& s = rho.space();
  return (symmetric_projector(s.modes(), s.particles()).matrix() * rho.matrix()).trace().real();
}

TEST(Pk, Examples) {
  EXPECT_NEAR(p_k(dicke_state({1, 2}, 2), 2), 1.0, 1e-14);
  EXPECT_NEAR(p_k(antisymmetric_state(2), 2), 0.0, 1e-14);
  EXPECT_NEAR(p_k(classical_mixture({1, 2}, 2), 2), 0.5, 1e-14);
  expect_kind(ErrorKind::Domain, [] { p_k(classical_mixture({1, 2}, 2), 3); });
  expect_kind(ErrorKind::Domain, [] { p_k(classical_mixture({1, 2}, 2), 1); });
}

TEST(Pk, IndependentOfWhichSlotsCarryTheProjector) {
  std::mt19937_64 rng(41);
  const auto rho = random_invariant_state(Space(2, 4), rng);
  const double first = p_k(rho, 2);
  EXPECT_NEAR(p_k_on(rho, {2, 4}), first, 1e-12);
  EXPECT_NEAR(p_k_on(rho, {3, 1}), first, 1e-12);
  EXPECT_NEAR(p_k_on(rho, {1, 3, 4}), p_k(rho, 3), 1e-12);
  expect_kind(ErrorKind::Validation, [&] { p_k_on(rho, {1, 1}); });
}

TEST(Pk, EqualsTrivialSchurWeightAndChainIsMonotone) {
  std::mt19937_64 rng(43);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      if (Space(m, n).dim() > 81) continue;
      for (int trial = 0; trial < 5; ++trial) {
        const auto rho = random_invariant_state(Space(m, n), rng, trial + 1);
        const double pn = p_k(rho, n);
        EXPECT_NEAR(pn, schur_weyl_blocks(rho).weight(Partition::single_row(n)), 1e-10);
        EXPECT_NEAR(pn, p_symmetric_weight(rho), 1e-12);
        for (int k = 3; k <= n; ++k) EXPECT_LE(p_k(rho, k), p_k(rho, k - 1) + 1e-12);
        const double tr_t = (transposition_mean(m, n).matrix() * rho.matrix()).trace().real();
        EXPECT_NEAR(tr_t, 2.0 * p_k(rho, 2) - 1.0, 1e-12);
      }
    }
  }
}

TEST(IndistinguishablePart, Examples) {
  const auto d = dicke_state({1, 2}, 2);
  const auto id = indistinguishable_part(d);
  EXPECT_NEAR(id.p_n, 1.0, 1e-14);
  EXPECT_LT((id.state.matrix() - d.matrix()).norm(), 1e-12);

  const auto cm = indistinguishable_part(classical_mixture({1, 2}, 2));
  EXPECT_NEAR(cm.p_n, 0.5, 1e-14);
  EXPECT_LT((cm.state.matrix() - d.matrix()).norm(), 1e-12);
  EXPECT_NEAR(p_k(cm.state, 2), 1.0, 1e-12);

  expect_kind(ErrorKind::NoSymmetricSupport, [] { indistinguishable_part(antisymmetric_state(2)); });
}

TEST(TraceDistance, BasicProperties) {
  const Space s(2, 2);
  const auto rho = classical_mixture({1, 2}, 2);
  EXPECT_NEAR(trace_distance(rho.op(), rho.op()), 0.0, 1e-14);
  Matrix a = Matrix::Zero(4, 4);
  Matrix b = Matrix::Zero(4, 4);
  a(static_cast<Eigen::Index>(s.index({1, 2})), static_cast<Eigen::Index>(s.index({1, 2}))) = 1.0;
  b(static_cast<Eigen::Index>(s.index({2, 1})), static_cast<Eigen::Index>(s.index({2, 1}))) = 1.0;
  EXPECT_NEAR(trace_distance(DenseOperator(s, a), DenseOperator(s, b)), 1.0, 1e-14);
  expect_kind(ErrorKind::Shape, [&] { trace_distance(rho.op(), classical_mixture({1, 2, 3}, 3).op()); });

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_invariant_state(s, rng);
    const auto y = random_invariant_state(s, rng);
    const auto z = random_invariant_state(s, rng);
    const double xy = trace_distance(x.op(), y.op());
    EXPECT_NEAR(xy, trace_distance(y.op(), x.op()), 1e-14);
    EXPECT_GE(xy, 0.0);
    EXPECT_LE(xy, 1.0 + 1e-12);
    EXPECT_LE(xy, trace_distance(x.op(), z.op()) + trace_distance(z.op(), y.op()) + 1e-12);
  }
}

TEST(TraceDistance, IndistinguishablePartIsOneMinusPn) {
  std::mt19937_64 rng(53);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto rho = random_invariant_state(Space(2, n), rng, trial % 3 + 1);
      const auto ind = indistinguishable_part(rho);
      EXPECT_NEAR(trace_distance(ind.state.op(), rho.op()), 1.0 - ind.p_n, 1e-9);
    }
  }
}

TEST(TvBound, TrivialRandomAndHelstrom) {
  const Space s(2, 2);
  const auto cm = classical_mixture({1, 2}, 2);
  EXPECT_NEAR(tv_vs_bound(cm, {Matrix::Identity(4, 4)}).tv, 0.0, 1e-14);
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = tv_vs_bound(cm, random_povm(s, 4, rng));
    EXPECT_NEAR(r.bound, 0.5, 1e-14);
    EXPECT_LE(r.tv, r.bound + 1e-9);
  }
  EXPECT_NEAR(tv_vs_bound(cm, helstrom_measurement(cm)).tv, 0.5, 1e-8);
}

TEST(TvBound, RandomStatesAndPovms) {
  std::mt19937_64 rng(61);
  for (int n = 2; n <= 3; ++n) {
    const Space s(2, n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = random_invariant_state(s, rng, trial % 3 + 1);
      for (int k = 0; k < 5; ++k) {
        const auto r = tv_vs_bound(rho, random_povm(s, 2 + k, rng));
        EXPECT_LE(r.tv, r.bound + 1e-9);
      }
      const auto h = tv_vs_bound(rho, helstrom_measurement(rho));
      EXPECT_NEAR(h.tv, h.bound, 1e-8);
    }
  }
}

TEST(TvBound, InvalidPovms) {
  const auto cm = classical_mixture({1, 2}, 2);
  const Space s(2, 2);
  expect_kind(ErrorKind::Validation, [&] { tv_vs_bound(cm, {Matrix::Identity(4, 4) * 0.5}); });
  expect_kind(ErrorKind::Validation, [&] { tv_vs_bound(cm, {}); });
  Matrix neg = Matrix::Identity(4, 4);
  neg(0, 0) = -1.0;
  Matrix rest = Matrix::Zero(4, 4);
  rest(0, 0) = 2.0;
  expect_kind(ErrorKind::Validation, [&] { tv_vs_bound(cm, {neg, rest}); });
  expect_kind(ErrorKind::Shape, [&] { validate_povm(s, {Matrix::Identity(2, 2)}); });
}

TEST(BoundB, ValuesAndShape) {
  for (int n = 2; n <= 10; ++n) {
    const double knee = static_cast<double>(n - 2) / (n - 1);
    EXPECT_NEAR(bound_b(knee, n), 0.0, 1e-15);
    EXPECT_NEAR(bound_b(1.0, n), 1.0, 1e-15);
    EXPECT_EQ(bound_b(Rational(n - 2, n - 1), n), Rational(0));
    EXPECT_EQ(breakpoint(n), Rational(n - 2, n - 1));
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double p2 = i / 100.0;
      const double b = bound_b(p2, n);
      EXPECT_GE(b, prev);
      EXPECT_LE(b, p2 + 1e-15);
      prev = b;
    }
  }
  EXPECT_NEAR(bound_b(0.9, 10), 0.1, 1e-12);
  EXPECT_EQ(bound_b(Rational(9, 10), 10), Rational(1, 10));
  expect_kind(ErrorKind::Domain, [] { bound_b(1.5, 3); });
  expect_kind(ErrorKind::Domain, [] { bound_b(0.5, 1); });
}

TEST(Lp, Examples) {
  for (int n = 2; n <= 6; ++n) {
    const auto e = lp_extrema(1.0, n, n);
    EXPECT_NEAR(e.min, 1.0, 1e-12);
    EXPECT_NEAR(e.max, 1.0, 1e-12);
  }
  const auto e = lp_extrema(0.8, 10, 10);
  EXPECT_NEAR(e.min, 0.1, 1e-12);
  EXPECT_NEAR(e.max, 0.9, 1e-12);
  const auto exact = lp_extrema(Rational(4, 5), 10, 10);
  EXPECT_EQ(exact.min, Rational(1, 10));
  EXPECT_EQ(exact.max, Rational(9, 10));
}

TEST(Lp, ReproducesClosedFormOnAGrid) {
  for (int n = 2; n <= 10; ++n) {
    for (int i = 0; i <= 100; ++i) {
      const double p2 = i / 100.0;
      const auto e = lp_extrema(2.0 * p2 - 1.0, n, n);
      EXPECT_NEAR(e.min, bound_b(p2, n), 1e-9) << n << " " << p2;
      EXPECT_NEAR(e.max, p2, 1e-9) << n << " " << p2;
      // Extra modes add no partitions with more than N rows.
      const auto wide = lp_extrema(2.0 * p2 - 1.0, n, n + 3);
      EXPECT_NEAR(wide.min, e.min, 1e-12);
    }
  }
}

TEST(Lp, ExactBreakpoint) {
  for (int n = 3; n <= 10; ++n) {
    const Rational knee = breakpoint(n);
    const auto e = lp_extrema(2 * knee - 1, n, n);
    EXPECT_EQ(e.min, Rational(0));
    EXPECT_EQ(e.max, knee);
    // Just above the knee the lower bound turns positive.
    const Rational above = knee + Rational(1, 1000);
    EXPECT_GT(lp_extrema(2 * above - 1, n, n).min, Rational(0));
  }
}

// With M = 2 < N = 3 the shape (1,1,1) is absent: t ranges over {1, 0}.
// The lower bound still matches, but the upper bound collapses to 2 p2 - 1.
TEST(Lp, FewerModesThanParticles) {
  for (int i = 50; i <= 100; ++i) {
    const double p2 = i / 100.0;
    const auto e = lp_extrema(2.0 * p2 - 1.0, 3, 2);
    EXPECT_NEAR(e.min, bound_b(p2, 3), 1e-12);
    EXPECT_NEAR(e.max, 2.0 * p2 - 1.0, 1e-12);
  }
  expect_kind(ErrorKind::Infeasible, [] { lp_extrema(-0.5, 3, 2); });
  expect_kind(ErrorKind::Infeasible, [] { lp_extrema(1.5, 3, 3); });
  expect_kind(ErrorKind::Infeasible, [] { lp_extrema(Rational(-2), 4, 4); });
}

TEST(Bounds, RandomStatesRespectTheBounds) {
  std::mt19937_64 rng(67);
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      if (Space(m, n).dim() > 81) continue;
      const int samples = Space(m, n).dim() > 30 ? 40 : 200;
      for (int trial = 0; trial < samples; ++trial) {
        const auto rho = random_invariant_state(Space(m, n), rng, trial % 4 + 1);
        const double p2 = p_k(rho, 2);
        const double pn = p_k(rho, n);
        EXPECT_GE(pn, bound_b(p2, n) - 1e-9);
        EXPECT_LE(pn, p2 + 1e-9);
      }
    }
  }
}

TEST(Bounds, TableRows) {
  const auto rows = bounds_table({2, 3}, {0.9, 0.5});
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.lower, r.lp_lower, 1e-9);
    EXPECT_NEAR(r.upper, r.lp_upper, 1e-9);
    EXPECT_LE(r.lower, r.upper);
  }
  const auto r = bound_row(0.9, 10);
  EXPECT_NEAR(r.lower, 0.1, 1e-12);
  EXPECT_NEAR(r.upper, 0.9, 1e-12);
}

TEST(TightStates, Examples) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_NEAR(p_k(tight_state(1.0, n), n), 1.0, 1e-12);
    EXPECT_NEAR(p_k(tight_state(0.0, n), n), 0.0, 1e-12);
  }
  // p2 = 5/6 at N = 3 reaches the lower bound 2/3.
  const auto low = tight_state(2.0 / 3.0, 3, TightBound::Lower);
  EXPECT_NEAR(p_k(low, 2), 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(p_k(low, 3), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(p_k(low, 3), bound_b(5.0 / 6.0, 3), 1e-12);
  expect_kind(ErrorKind::Domain, [] { tight_state(1.2, 3); });
}

TEST(TightStates, SaturateBothBounds) {
  for (int n = 3; n <= 4; ++n) {
    for (int i = 0; i <= 10; ++i) {
      const double alpha = i / 10.0;
      const auto up = tight_state(alpha, n, TightBound::Upper);
      EXPECT_NEAR(p_k(up, n), p_k(up, 2), 1e-9);
      EXPECT_NEAR(p_k(up, n), alpha, 1e-9);
      const auto low = tight_state(alpha, n, TightBound::Lower);
      const double p2 = p_k(low, 2);
      EXPECT_NEAR(p_k(low, n), bound_b(p2, n), 1e-9);
      EXPECT_NEAR(p2, alpha + (1 - alpha) * (n - 2.0) / (n - 1.0), 1e-9);
    }
  }
}

// Mixing with the antisymmetric state only ever gives p_N = p2, so that
// family cannot reach the lower bound once N >= 3 and p2 < 1.
TEST(TightStates, AntisymmetricFamilyMissesTheLowerBound) {
  for (int n = 3; n <= 4; ++n) {
    const auto up = tight_state(0.5, n, TightBound::Upper);
    EXPECT_GT(p_k(up, n) - bound_b(p_k(up, 2), n), 0.1);
  }
}

}  // namespace
}  // namespace bosind
