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

#include "bosind/operator.hpp"

#include <cmath>
#include <string>

#include "bosind/errors.hpp"
#include "bosind/states.hpp"

namespace bosind {

Space::Space(int modes, int particles) : modes_(modes), particles_(particles), dim_(1) {
  if (modes < 1 || particles < 1) {
    throw Error(ErrorKind::Domain, "space needs M >= 1 and N >= 1");
  }
  for (int i = 0; i < particles; ++i) {
    dim_ *= static_cast<std::size_t>(modes);
    if (dim_ > kMaxDimension) {
      throw Error(ErrorKind::Size, "M^N = " + std::to_string(modes) + "^" + std::to_string(particles) +
                                       " exceeds the dense guard of " + std::to_string(kMaxDimension));
    }
  }
}

ModeAssignment Space::assignment(std::size_t index) const {
  ModeAssignment l(static_cast<std::size_t>(particles_));
  for (int slot = particles_ - 1; slot >= 0; --slot) {
    l[static_cast<std::size_t>(slot)] = static_cast<int>(index % static_cast<std::size_t>(modes_)) + 1;
    index /= static_cast<std::size_t>(modes_);
  }
  return l;
}

std::size_t Space::index(const ModeAssignment& l) const {
  if (static_cast<int>(l.size()) != particles_) {
    throw Error(ErrorKind::Validation, "mode assignment has " + std::to_string(l.size()) +
                                           " entries, expected N = " + std::to_string(particles_));
  }
  std::size_t idx = 0;
  for (int mode : l) {
    if (mode < 1 || mode > modes_) {
      throw Error(ErrorKind::Validation, "mode " + std::to_string(mode) + " outside 1.." +
                                             std::to_string(modes_));
    }
    idx = idx * static_cast<std::size_t>(modes_) + static_cast<std::size_t>(mode - 1);
  }
  return idx;
}

DenseOperator::DenseOperator(Space space, Matrix matrix) : space_(space), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.idim() || matrix_.cols() != space_.idim()) {
    throw Error(ErrorKind::Shape, "operator is " + std::to_string(matrix_.rows()) + "x" +
                                      std::to_string(matrix_.cols()) + ", space dimension is " +
                                      std::to_string(space_.dim()));
  }
}

InvariantState InvariantState::certify(DenseOperator op, double tol) {
  const Matrix& m = op.matrix();
  const double herm = linalg::hermiticity_defect(m);
  if (herm > tol) {
    throw Error(ErrorKind::Validation, "state is not hermitian (defect " + std::to_string(herm) + ")");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw Error(ErrorKind::Validation, "state trace is " + std::to_string(tr) + ", expected 1");
  }
  const auto eig = linalg::eigh(m);
  if (eig.values.size() > 0 && eig.values(0) < -1e-10) {
    throw Error(ErrorKind::Validation,
                "state is not positive (min eigenvalue " + std::to_string(eig.values(0)) + ")");
  }
  const auto report = invariance_defect(op);
  if (report.worst_defect >= tol) {
    throw Error(ErrorKind::Invariance,
                "state is not permutation invariant: transposition (" +
                    std::to_string(report.worst_position) + " " +
                    std::to_string(report.worst_position + 1) + ") changes it by " +
                    std::to_string(report.worst_defect) + " in Frobenius norm");
  }
  Matrix sym = 0.5 * (m + m.adjoint());
  return InvariantState(DenseOperator(op.space(), std::move(sym)), tol);
}

}  // namespace bosind
