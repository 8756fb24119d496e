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

#include <cstddef>
#include <vector>

#include "bosind/linalg.hpp"

namespace bosind {

inline constexpr std::size_t kMaxDimension = 4096;

// Mode assignment vector (l_1, ..., l_N), 1-based modes.
using ModeAssignment = std::vector<int>;

// The external Hilbert space (C^M)^{⊗N}. Basis states |l_1 ... l_N> are
// indexed lexicographically with l_1 most significant.
class Space {
 public:
  // Throws Domain for M or N < 1 and Size when M^N exceeds kMaxDimension.
  Space(int modes, int particles);

  int modes() const { return modes_; }
  int particles() const { return particles_; }
  std::size_t dim() const { return dim_; }
  int idim() const { return static_cast<int>(dim_); }

  ModeAssignment assignment(std::size_t index) const;
  // Throws Validation for out-of-range modes or a wrong length.
  std::size_t index(const ModeAssignment& l) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  int modes_;
  int particles_;
  std::size_t dim_;
};

// Square complex matrix on a declared Space.
class DenseOperator {
 public:
  // Throws Shape unless the matrix is dim x dim.
  DenseOperator(Space space, Matrix matrix);

  const Space& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  Space space_;
  Matrix matrix_;
};

// A density matrix certified positive, unit trace and permutation invariant.
// Only obtainable through certify(); everything downstream may rely on it.
class InvariantState {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  // Throws Validation (hermiticity, trace, positivity) or Invariance (names
  // the worst adjacent transposition).
  static InvariantState certify(DenseOperator op, double tol = kDefaultTolerance);
  static InvariantState certify(const Space& space, Matrix m, double tol = kDefaultTolerance) {
    return certify(DenseOperator(space, std::move(m)), tol);
  }

  const DenseOperator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix(); }
  const Space& space() const { return op_.space(); }
  double tolerance() const { return tolerance_; }

 private:
  InvariantState(DenseOperator op, double tol) : op_(std::move(op)), tolerance_(tol) {}
  DenseOperator op_;
  double tolerance_;
};

}  // namespace bosind
