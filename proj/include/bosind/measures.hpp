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

#pragma once

#include <utility>
#include <vector>

#include "bosind/operator.hpp"
#include "bosind/symgroup.hpp"

namespace bosind {

// tr[(P_S^(k) ⊗ 1) rho] with the projector on the first k factors.
// 2 <= k <= N, else Domain.
double p_k(const InvariantState& rho, int k);
// Same quantity with the projector on an arbitrary set of k slots (1-based).
double p_k_on(const InvariantState& rho, const std::vector<int>& slots);

struct IndistinguishablePart {
  InvariantState state;  // P_S rho P_S / p_N
  double p_n = 0.0;
};

// Throws NoSymmetricSupport when p_N <= 1e-12.
IndistinguishablePart indistinguishable_part(const InvariantState& rho);

// (1/2) tr|a - b|. Throws Shape on mismatched spaces.
double trace_distance(const DenseOperator& a, const DenseOperator& b);

using Povm = std::vector<Matrix>;

// Throws Validation unless every element is hermitian PSD and they sum to
// the identity within 1e-9.
void validate_povm(const Space& space, const Povm& povm);

struct TvBound {
  double tv = 0.0;     // (1/2) sum_k |tr[M_k rho_ind] - tr[M_k rho]|
  double bound = 0.0;  // 1 - p_N
};

TvBound tv_vs_bound(const InvariantState& rho, const Povm& povm);

// {projector on the positive part of rho_ind - rho, its complement}.
Povm helstrom_measurement(const InvariantState& rho);

// max(0, p2 (N - 1) - (N - 2)). p2 in [0,1], N >= 2, else Domain.
double bound_b(double p2, int n);
Rational bound_b(const Rational& p2, int n);
// p2 at which the lower bound leaves zero: (N - 2)/(N - 1).
Rational breakpoint(int n);

template <typename T>
struct Extrema {
  T min;
  T max;
};

// Extremes of p_(N) over {p_lambda >= 0 : sum p = 1, sum t_lambda p = c} for
// partitions of N with at most M rows. Basic feasible solutions have at most
// two nonzero weights, so the vertices are enumerated directly.
// Throws Infeasible when c lies outside [min t, max t].
Extrema<double> lp_extrema(double c, int n, int modes);
Extrema<Rational> lp_extrema(const Rational& c, int n, int modes);

struct BoundResult {
  double p2 = 0.0;
  int n = 0;
  double lower = 0.0;
  double upper = 0.0;
  double lp_lower = 0.0;
  double lp_upper = 0.0;
};

BoundResult bound_row(double p2, int n);
std::vector<BoundResult> bounds_table(const std::vector<int>& n_list, const std::vector<double>& p2_grid);

enum class TightBound { Upper, Lower };

// M = N states meeting the bounds.
//   Upper: alpha |D_N><D_N| + (1 - alpha) |AS_N><AS_N|, p_2 = p_N = alpha.
//   Lower: alpha |D_N><D_N| + (1 - alpha) rho_(N-1,1), with rho_(N-1,1) the
//          normalised (N-1,1)-isotypic part of the orbit of |1 ... N>;
//          p_N = alpha, p_2 = alpha + (1 - alpha)(N - 2)/(N - 1).
// The antisymmetric family cannot meet the lower bound for N >= 3 since
// there p_2 = p_N.
InvariantState tight_state(double alpha, int n, TightBound which = TightBound::Upper);

}  // namespace bosind
