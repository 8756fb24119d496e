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

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bosind/operator.hpp"

namespace bosind {

struct InvarianceReport {
  double worst_defect = 0.0;  // max over adjacent transpositions, Frobenius
  int worst_position = 0;     // 1-based i of the transposition (i i+1)
};

// Invariance under the adjacent transpositions generates invariance under S_N.
InvarianceReport invariance_defect(const DenseOperator& op);
bool is_invariant(const DenseOperator& op, double tol);

// (1/N!) sum_pi D(pi) X D(pi)^dagger.
Matrix twirl(const Space& space, const Matrix& x);

// Normalised symmetrisation of |l>.
InvariantState dicke_state(const ModeAssignment& l, int modes);
// Totally antisymmetric state of N particles in M = N modes.
InvariantState antisymmetric_state(int particles);
// Uniform mixture over the distinct permutations of |l>.
InvariantState classical_mixture(const ModeAssignment& l, int modes);

// |v><v| / <v|v>, certified.
InvariantState pure_state(const Space& space, const Vector& v);
// sum_i w_i rho_i, certified; weights must be a probability vector.
InvariantState mixture(const std::vector<std::pair<double, InvariantState>>& terms);

// Twirl of a random density matrix G G^dagger / tr with G a dim x rank
// Ginibre matrix (rank <= 0 means full rank).
InvariantState random_invariant_state(const Space& space, std::mt19937_64& rng, int rank = 0);

struct Eigenspace {
  double eigenvalue = 0.0;  // q_k
  int rank = 0;
  Matrix basis;             // dim x rank, orthonormal
  Matrix projector() const { return basis * basis.adjoint(); }
};

struct Eigenspaces {
  std::vector<Eigenspace> spaces;  // decreasing eigenvalue
  bool degeneracy_warning = false;
  std::string warning;
};

// Eigenvalues above tol, clustered within tol. A gap below 10 * tol between
// neighbouring clusters (or to zero) raises the degeneracy warning.
Eigenspaces spectral_eigenspaces(const InvariantState& rho, double tol = 1e-8);

// |psi> = (1 ⊗ sqrt(rho)^T)|phi+> on H ⊗ H, amplitude index i * dim + j.
struct Purification {
  Space space;
  Vector amplitudes;

  Matrix amplitude_matrix() const;  // psi(i, j)
  Matrix reduced_first() const;     // tr_2 |psi><psi|
  Matrix reduced_second() const;    // tr_1 |psi><psi|
};

Purification symmetric_purification(const InvariantState& rho);

}  // namespace bosind
