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

// The representation D_N of S_N on (C^M)^{⊗N} and the operators built from
// it.
//
// D(pi) moves the tensor factor in slot i to slot pi(i):
//     D(pi) |l_1 ... l_N> = |l_{pi^-1(1)} ... l_{pi^-1(N)}>,
// which makes D a homomorphism for (p * q)(i) = p(q(i)). For transpositions
// this is the familiar pi|l> = |l_pi(1) ... l_pi(N)>.

#include <cstdint>
#include <functional>
#include <vector>

#include "bosind/operator.hpp"
#include "bosind/symgroup.hpp"

namespace bosind {

// map[b] = a  such that D(pi)|b> = |a>.
std::vector<std::uint32_t> index_map(const Permutation& p, const Space& space);

// sum_pi coeff(pi) D(pi) assembled through index maps.
Matrix group_sum(const Space& space, const std::vector<Permutation>& elements,
                 const std::function<cplx(const Permutation&)>& coeff);

// D(pi) X D(pi)^dagger without forming D(pi).
Matrix conjugate_by(const Permutation& p, const Space& space, const Matrix& x);
// tr[D(pi) X].
cplx trace_with(const Permutation& p, const Space& space, const Matrix& x);
// D(pi) v.
Vector apply(const Permutation& p, const Space& space, const Vector& v);

DenseOperator perm_operator(const Permutation& p, int modes);
DenseOperator symmetric_projector(int modes, int particles);
DenseOperator antisymmetric_projector(int modes, int particles);
// P_S^{(k)} on the first k factors, identity on the rest.
DenseOperator partial_symmetric_projector(int modes, int particles, int k);

// D(a_t b_t) with a_t the row-group sum and b_t the signed column-group sum.
// Throws Validation for a non-standard tableau.
DenseOperator young_symmetrizer(const YoungTableau& tableau, int modes);

// Mean of the N(N-1)/2 transpositions. N >= 2, else Domain.
DenseOperator transposition_mean(int modes, int particles);

// (d_lambda / N!) sum_pi chi_lambda(pi) D(pi).
DenseOperator isotypic_projector(const Partition& lam, int modes, int particles);

// Orthonormal frame adapted to H_lambda ⊗ K_lambda inside (a subspace of) the
// lambda-isotypic component.
//
// Multiplicity-space convention: H_lambda is identified with the range of
// D(Y_t) for the row-reading tableau t. Its orthonormal basis ("highest")
// comes from the SVD of D(Y_t) (restricted to the subspace, if one is given).
// The irrep factor K_lambda is spanned by D(g_a) applied to those vectors,
// with generators g_a picked greedily in lexicographic order from S_N and
// Gram-Schmidt coefficients fixed once per (lambda, M). Because the
// coefficients are shared, frames built inside two different invariant
// subspaces transform identically under D_N.
struct IsotypicFrame {
  Partition shape;
  int irrep_dim = 0;     // d_lambda
  int multiplicity = 0;  // dim H_lambda within the subspace
  Matrix highest;        // dim x multiplicity
  std::vector<Permutation> generators;  // d_lambda of them
  Matrix coefficients;   // d_lambda x d_lambda, column a = e_a in generator basis
  Space space;

  // dim x (multiplicity * d_lambda), column i * d_lambda + a = h_i ⊗ e_a.
  Matrix embedding() const;
};

IsotypicFrame isotypic_frame(const Partition& lam, int modes);
// Frame restricted to an invariant subspace given by its projector; reuses
// the generators and coefficients of the full-space frame.
IsotypicFrame isotypic_frame(const IsotypicFrame& full, const Matrix& invariant_projector);

class InvariantState;

struct SchurBlock {
  Partition shape;
  double weight = 0.0;  // p_lambda
  Matrix state;         // rho_lambda on H_lambda, unit trace
  int irrep_dim = 0;    // d_lambda
  Matrix embedding;     // see IsotypicFrame::embedding
};

struct SchurBlocks {
  Space space;
  std::vector<SchurBlock> blocks;

  // sum_lambda W (p rho_lambda ⊗ 1/d) W^dagger.
  Matrix reassemble() const;
  double weight(const Partition& lam) const;
};

SchurBlocks schur_weyl_blocks(const InvariantState& rho);

}  // namespace bosind
