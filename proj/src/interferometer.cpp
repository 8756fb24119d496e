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

#include "bosind/interferometer.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "bosind/errors.hpp"
#include "bosind/symgroup.hpp"

namespace bosind {

int ModeOccupation::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

ModeAssignment ModeOccupation::assignment() const {
  ModeAssignment l;
  for (int j = 0; j < modes(); ++j) l.insert(l.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(j)]), j + 1);
  return l;
}

ModeOccupation make_occupation(std::vector<int> counts, int particles) {
  ModeOccupation m{std::move(counts)};
  if (m.counts.empty()) throw Error(ErrorKind::Validation, "occupation has no modes");
  for (int c : m.counts) {
    if (c < 0) throw Error(ErrorKind::Validation, "occupation has a negative count");
  }
  if (m.total() != particles) {
    throw Error(ErrorKind::Validation, "occupation sums to " + std::to_string(m.total()) + ", expected N = " +
                                           std::to_string(particles));
  }
  return m;
}

ModeOccupation occupation_of(const ModeAssignment& l, int modes) {
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  for (int mode : l) {
    if (mode < 1 || mode > modes) throw Error(ErrorKind::Validation, "mode outside 1..M");
    ++counts[static_cast<std::size_t>(mode - 1)];
  }
  return ModeOccupation{std::move(counts)};
}

std::vector<ModeOccupation> occupations(int modes, int particles) {
  if (modes < 1 || particles < 0) throw Error(ErrorKind::Domain, "occupations need M >= 1 and N >= 0");
  std::vector<ModeOccupation> out;
  std::vector<int> c(static_cast<std::size_t>(modes), 0);
  // Recursion from the last mode down yields colexicographic order directly.
  auto fill = [&](auto&& self, int j, int left) -> void {
    if (j == 0) {
      c[0] = left;
      out.push_back(ModeOccupation{c});
      return;
    }
    for (int k = 0; k <= left; ++k) {
      c[static_cast<std::size_t>(j)] = k;
      self(self, j - 1, left - k);
    }
  };
  fill(fill, modes - 1, particles);
  return out;
}

double OutcomeDistribution::probability(const ModeOccupation& m) const {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i] == m) return probabilities[i];
  }
  throw Error(ErrorKind::Validation, "occupation not in the distribution");
}

Matrix tensor_power(const Matrix& u, int particles) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::Shape, "tensor_power needs a square matrix");
  const Space guard(static_cast<int>(u.rows()), particles);
  Matrix out = u;
  for (int i = 1; i < particles; ++i) out = Eigen::kroneckerProduct(out, u).eval();
  return out;
}

namespace {

void check_interferometer(const Space& space, const Matrix& u) {
  if (u.rows() != space.modes() || u.cols() != space.modes()) {
    throw Error(ErrorKind::Shape, "interferometer must be " + std::to_string(space.modes()) + "x" +
                                      std::to_string(space.modes()));
  }
  if (!linalg::is_unitary(u, 1e-10)) throw Error(ErrorKind::Validation, "interferometer is not unitary");
}

}  // namespace

InvariantState evolve(const InvariantState& rho, const Matrix& u) {
  check_interferometer(rho.space(), u);
  const Matrix big = tensor_power(u, rho.space().particles());
  return InvariantState::certify(rho.space(), big * rho.matrix() * big.adjoint(), rho.tolerance());
}

DenseOperator measurement_operator(const ModeOccupation& m, int particles) {
  const ModeOccupation occ = make_occupation(m.counts, particles);
  const Space space(occ.modes(), particles);
  Matrix e = Matrix::Zero(space.idim(), space.idim());
  ModeAssignment l = occ.assignment();
  do {
    const auto i = static_cast<Eigen::Index>(space.index(l));
    e(i, i) = 1.0;
  } while (std::next_permutation(l.begin(), l.end()));
  return DenseOperator(space, std::move(e));
}

OutcomeDistribution outcome_distribution(const InvariantState& rho, const Matrix& u) {
  const Space& space = rho.space();
  check_interferometer(space, u);
  const Matrix big = tensor_power(u, space.particles());
  // Only the diagonal of U rho U^dagger is needed.
  const Matrix left = big * rho.matrix();
  const RealVector diag = (left.cwiseProduct(big.conjugate())).rowwise().sum().real();
  OutcomeDistribution dist{space.modes(), space.particles(), occupations(space.modes(), space.particles()), {}};
  dist.probabilities.assign(dist.outcomes.size(), 0.0);
  for (std::size_t i = 0; i < dist.outcomes.size(); ++i) {
    ModeAssignment l = dist.outcomes[i].assignment();
    double p = 0.0;
    do {
      p += diag(static_cast<Eigen::Index>(space.index(l)));
    } while (std::next_permutation(l.begin(), l.end()));
    dist.probabilities[i] = std::max(p, 0.0);
  }
  return dist;
}

cplx permanent(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::Shape, "permanent needs a square matrix");
  const auto n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  if (n > 30) throw Error(ErrorKind::Size, "permanent limited to n <= 30");
  // Ryser: Per A = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij,
  // visiting subsets in Gray-code order so each step toggles one column.
  Vector row_sums = Vector::Zero(n);
  cplx total = 0.0;
  std::uint64_t gray = 0;
  int size = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t diff = next ^ gray;
    const int col = std::countr_zero(diff);
    if (next & diff) {
      row_sums += a.col(col);
      ++size;
    } else {
      row_sums -= a.col(col);
      --size;
    }
    gray = next;
    const cplx prod = row_sums.prod();
    total += (size % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

double permanent_oracle(const Matrix& u, const ModeOccupation& in, const ModeOccupation& out) {
  const int n = in.total();
  if (out.total() != n) throw Error(ErrorKind::Validation, "input and output occupations differ in N");
  if (n > 5) throw Error(ErrorKind::Size, "permanent oracle limited to N <= 5");
  if (u.rows() != in.modes() || u.cols() != in.modes() || out.modes() != in.modes()) {
    throw Error(ErrorKind::Shape, "occupation length does not match the interferometer");
  }
  const ModeAssignment rows = out.assignment();
  const ModeAssignment cols = in.assignment();
  Matrix sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      sub(r, c) = u(rows[static_cast<std::size_t>(r)] - 1, cols[static_cast<std::size_t>(c)] - 1);
    }
  }
  double norm = 1.0;
  for (int c : in.counts) norm *= static_cast<double>(factorial(c));
  for (int c : out.counts) norm *= static_cast<double>(factorial(c));
  return std::norm(permanent(sub)) / norm;
}

Matrix beamsplitter() {
  Matrix u(2, 2);
  u << 1.0, 1.0, 1.0, -1.0;
  return u / std::sqrt(2.0);
}

Matrix fourier(int modes) {
  if (modes < 1) throw Error(ErrorKind::Domain, "fourier needs M >= 1");
  Matrix f(modes, modes);
  for (int j = 0; j < modes; ++j) {
    for (int k = 0; k < modes; ++k) {
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(modes)),
                           2.0 * std::numbers::pi * j * k / modes);
    }
  }
  return f;
}

}  // namespace bosind
