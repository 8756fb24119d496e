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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bosind/operator.hpp"
#include "bosind/symgroup.hpp"

namespace bosind {

// tr[D(pi) P] per conjugacy class, for an invariant projector P.
struct CharacterProfile {
  std::vector<std::pair<CycleType, cplx>> values;  // partitions order, identity class last
  int dim = 0;                                     // rank of P

  cplx value(const CycleType& mu) const;
  // Largest |value| over the non-identity classes.
  double off_identity() const;
};

// Throws Invariance if P does not commute with D_N (1e-8) and
// NumericalDegeneracy if the trace is not constant on a class (1e-9).
CharacterProfile character_profile(const DenseOperator& projector);

// rank(P) / N! for a projector carrying copies of the regular
// representation; NotRegular if the profile does not vanish off the identity
// (1e-8 * rank) or the ratio is not an integer.
int regular_multiplicity(const DenseOperator& projector);

struct EigenspaceVerdict {
  double eigenvalue = 0.0;
  int rank = 0;
  CharacterProfile profile;
  bool regular = false;
  int multiplicity = 0;  // i_k, meaningful when regular
};

struct Certificate {
  bool distinguishable = false;
  std::vector<EigenspaceVerdict> eigenspaces;  // decreasing eigenvalue
  std::vector<int> multiplicities;             // i_k, filled when distinguishable
  // First (eigenspace, class) violating the character condition.
  std::optional<int> witness_eigenspace;
  std::optional<CycleType> witness_cycle_type;
  cplx witness_value = 0.0;
  // Strictly increasing assignments per eigenspace, filled when distinguishable.
  std::vector<std::vector<ModeAssignment>> assignments;
  double symmetric_weight = 0.0;  // tr[P_S rho]
  bool symmetric_weight_matches = false;  // |tr[P_S rho] - 1/N!| < tol
  bool degeneracy_warning = false;
  std::string warning;
};

Certificate is_perfectly_distinguishable(const InvariantState& rho, double tol = 1e-8);

// Strictly increasing N-tuples over {1..M} in lexicographic order, handed
// out greedily: counts[k] tuples for slot k, skipping any in `reserved`.
std::vector<std::vector<ModeAssignment>> allocate_assignments(const std::vector<int>& counts, int modes,
                                                              int particles,
                                                              const std::vector<ModeAssignment>& reserved = {});

struct CanonicalForm {
  Matrix unitary;                                   // commutes with D_N
  std::vector<std::vector<ModeAssignment>> assignments;
  Matrix canonical;                                 // U rho U^dagger
  Matrix target;                                    // sum_k q_k sum_l orbit projector of l(k, l)
};

// Permutation invariant unitary taking rho to a diagonal mixture of orbits of
// distinct-mode assignments. Throws NotDistinguishable if rho fails the
// certificate and NumericalDegeneracy if orbit orthogonalisation fails.
CanonicalForm canonical_form(const InvariantState& rho, std::uint64_t seed = 0, double tol = 1e-8);

// The M = N = 3 counterexample with tr[rho pi] = 0 for pi != id that is not
// perfectly distinguishable. The 6x6 block lives on |abc> with (a,b,c) a
// permutation of (1,2,3), ordered lexicographically:
// 123, 132, 213, 231, 312, 321.
InvariantState counterexample_state();
// sqrt(rho) / tr sqrt(rho) for the state above; satisfies tr[rho'^2 pi] = 0.
InvariantState counterexample_root_state();

}  // namespace bosind
