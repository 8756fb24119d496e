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

#include <vector>

#include "bosind/operator.hpp"

namespace bosind {

// Particle counts per mode.
struct ModeOccupation {
  std::vector<int> counts;

  int modes() const { return static_cast<int>(counts.size()); }
  int total() const;
  // Nondecreasing mode assignment l(m), e.g. (1,1) -> (1,2), (2,0) -> (1,1).
  ModeAssignment assignment() const;

  friend bool operator==(const ModeOccupation&, const ModeOccupation&) = default;
};

// Throws Validation unless counts are nonnegative and sum to N.
ModeOccupation make_occupation(std::vector<int> counts, int particles);
ModeOccupation occupation_of(const ModeAssignment& l, int modes);

// All occupations of M modes by N particles in colexicographic order:
// (2,0), (1,1), (0,2) for M = N = 2.
std::vector<ModeOccupation> occupations(int modes, int particles);

struct OutcomeDistribution {
  int modes = 0;
  int particles = 0;
  std::vector<ModeOccupation> outcomes;  // colexicographic
  std::vector<double> probabilities;

  double probability(const ModeOccupation& m) const;
};

// U^{⊗N} as a dense M^N x M^N matrix.
Matrix tensor_power(const Matrix& u, int particles);

// U^{⊗N} rho U^{dagger ⊗N}. Throws Validation unless U is unitary to 1e-10.
InvariantState evolve(const InvariantState& rho, const Matrix& u);

// Projector on the span of the permutation orbit of |l(m)>.
DenseOperator measurement_operator(const ModeOccupation& m, int particles);

// prob(m) = tr[E(m) U^{⊗N} rho U^{dagger ⊗N}].
OutcomeDistribution outcome_distribution(const InvariantState& rho, const Matrix& u);

// Permanent by Ryser's formula in Gray-code order.
cplx permanent(const Matrix& a);

// |Per U_sub|^2 / (prod m_in! prod m_out!), U_sub(r, c) = U(out_r, in_c)
// with rows and columns repeated per occupation. N <= 5, else Size.
double permanent_oracle(const Matrix& u, const ModeOccupation& in, const ModeOccupation& out);

// [[1, 1], [1, -1]] / sqrt(2).
Matrix beamsplitter();
// F(j, k) = exp(2 pi i j k / M) / sqrt(M).
Matrix fourier(int modes);

}  // namespace bosind
