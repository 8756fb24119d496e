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

#include <cstdint>
#include <vector>

#include "bosind/interferometer.hpp"
#include "bosind/operator.hpp"

namespace bosind {

// K(M, N) = C(N + M^2 - 1, M^2 - 1), the real dimension of the hermitian
// permutation invariant operators on (C^M)^{⊗N}.
std::uint64_t invariant_dimension(int modes, int particles);

// Hilbert-Schmidt orthonormal hermitian basis of M x M matrices: the E_jj,
// then for each j < k the pair (E_jk + E_kj)/sqrt2, i(E_kj - E_jk)/sqrt2.
std::vector<Matrix> hermitian_basis(int modes);

// Exponent vectors n over the M^2 basis elements with |n| = N, in the
// colexicographic order of occupations(M^2, N).
std::vector<std::vector<int>> j_indices(int modes, int particles);

// J(n) = (1 / prod n_j!) sum_pi D(pi) (G_1^{⊗n_1} ⊗ G_2^{⊗n_2} ⊗ ...) D(pi)^dagger,
// so that A^{⊗N} = sum_n prod_j lambda_j^{n_j} J(n) for A = sum_j lambda_j G_j.
std::vector<Matrix> j_basis(int modes, int particles);

struct BasisCertificate {
  double abs_det = 0.0;    // |det| of the row-normalised coefficient matrix
  double condition = 0.0;  // its 2-norm condition number
  bool ok = false;         // abs_det > 1e-12 and condition < 1e8
};

// K single-particle observables whose N-fold tensor powers span the
// invariant operators, with the certificate for that claim.
struct ObservableBasis {
  int modes = 0;
  int particles = 0;
  std::vector<Matrix> observables;
  RealMatrix coefficients;  // K x K, row i: prod_j lambda_ij^{n_j}
  BasisCertificate certificate;

  // Certificate computed, never thrown; Validation for non-hermitian input.
  static ObservableBasis from_observables(std::vector<Matrix> observables, int particles);
};

// Standard-normal coefficients in hermitian_basis(M), resampled up to 32
// times until certified; Conditioning error afterwards.
ObservableBasis random_observable_basis(int modes, int particles, std::uint64_t seed);

// U = V^dagger for A = V diag(a) V^dagger, one per observable: measuring
// occupations after U is a measurement in the eigenbasis of A^{⊗N}.
std::vector<Matrix> measurement_settings(const ObservableBasis& basis);

struct ExperimentRecord {
  Matrix unitary;
  OutcomeDistribution distribution;
};

std::vector<ExperimentRecord> simulate_records(const InvariantState& rho, const std::vector<Matrix>& unitaries);

struct Reconstruction {
  InvariantState state;
  int rank = 0;             // of the design matrix
  double residual = 0.0;    // ||design x - probabilities||_2
  double min_singular = 0.0;
  double max_singular = 0.0;
  double clipped = 0.0;     // negative eigenvalue weight removed
};

// Least squares over the J(n) coordinates, then eigenvalue clipping and
// renormalisation. Throws Underdetermined when the design is rank deficient.
Reconstruction reconstruct_state(const std::vector<ExperimentRecord>& records, int modes, int particles);

struct ProductTerm {
  double coefficient = 0.0;
  Matrix observable;  // single-particle hermitian A
};

// O = sum_i c_i A_i ⊗ A_i for a swap-invariant hermitian two-particle
// operator. The frame is {1} plus random observables certified at N = 2;
// vanishing coefficients are dropped. Validation if O is not invariant.
std::vector<ProductTerm> expand_invariant_two_body(const Matrix& o, int modes, std::uint64_t seed = 1);

// <A ⊗ A> on the two-particle marginal from occupation statistics measured
// in the eigenbasis of A: sum_m prob(m) e_2(a^m) / C(N, 2).
double pair_expectation(const OutcomeDistribution& dist, const RealVector& eigenvalues);

struct P2Estimate {
  double value = 0.0;
  std::vector<ProductTerm> terms;
};

// p_2 from the product expansion of P_S^(2), each <A_i ⊗ A_i> read off
// the interference statistics of its eigenbasis setting.
P2Estimate estimate_p2(const InvariantState& rho, std::uint64_t seed = 1);

}  // namespace bosind
