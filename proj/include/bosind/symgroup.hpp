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

// Exact combinatorics of the symmetric group S_N.
//
// Conventions:
//   * A Permutation stores its one-line images 0-based; from_one_line() and
//     one_line() speak the usual 1-based notation.
//   * Composition is right-to-left: (p * q)(i) = p(q(i)).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace bosind {

using Rational = boost::rational<long long>;

inline constexpr int kMaxEnumeratedParticles = 8;

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

class Partition {
 public:
  Partition() = default;
  // Parts must be positive and weakly decreasing; throws Validation.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return boxes_; }  // N
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int row) const { return parts_[static_cast<std::size_t>(row)]; }

  Partition conjugate() const;
  std::string str() const;  // "(2,1)"

  // Identity of shape (1,...,1) and single row (N).
  static Partition single_row(int n);
  static Partition single_column(int n);

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int boxes_ = 0;
};

// Cycle lengths of a permutation, sorted decreasingly.
using CycleType = Partition;

class Permutation {
 public:
  static Permutation identity(int n);
  // 1-based one-line notation, e.g. {2,3,1}. Throws Validation if not a
  // bijection on {1..n}.
  static Permutation from_one_line(const std::vector<int>& one_based);
  static Permutation from_images(std::vector<int> zero_based);
  // Transposition of the 1-based positions i and j.
  static Permutation transposition(int n, int i, int j);
  // Cycle (c_1 -> c_2 -> ... -> c_k -> c_1) on 1-based labels.
  static Permutation cycle(int n, const std::vector<int>& one_based);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  bool is_identity() const;
  int sign() const { return sign_; }
  const CycleType& cycle_type() const { return cycle_type_; }

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images);
  std::vector<int> images_;
  int sign_ = 1;
  CycleType cycle_type_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// All n! permutations in lexicographic order of their one-line notation
// (identity first). 1 <= n <= 8, else Size.
std::vector<Permutation> permutations(int n);

int sign(const Permutation& p);
CycleType cycle_type(const Permutation& p);

// A permutation with the given cycle type (cycles on consecutive labels).
Permutation class_representative(const CycleType& mu);
// Number of permutations with cycle type mu: N! / z_mu.
std::uint64_t class_size(const CycleType& mu);

// Partitions of n with at most max_rows rows, reverse-lexicographic from (n).
std::vector<Partition> partitions(int n, int max_rows);
inline std::vector<Partition> partitions(int n) { return partitions(n, n); }

// Irrep dimension d_lambda by the hook length formula (N <= 20).
std::uint64_t hook_dimension(const Partition& lam);

// chi_lambda(mu) by Murnaghan-Nakayama; memoised, thread-safe.
long long irrep_character(const Partition& lam, const CycleType& mu);

// Eigenvalue of the transposition mean on the lambda-isotypic component:
// (1/(N(N-1))) * sum_j [lambda_j^2 - (2j-1) lambda_j]. N >= 2, else Domain.
Rational transposition_eigenvalue(const Partition& lam);

// Young tableau with entries 1..N placed in the boxes of a Young diagram.
class YoungTableau {
 public:
  // Throws Validation unless rows form a Young diagram filled with 1..N.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  // Tableau filled row by row: [[1..l1],[l1+1..],...].
  static YoungTableau row_reading(const Partition& shape);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  bool is_standard() const;

  // Permutations preserving each row (resp. column) set.
  std::vector<Permutation> row_group() const;
  std::vector<Permutation> column_group() const;

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

std::vector<YoungTableau> standard_tableaux(const Partition& shape);

}  // namespace bosind
