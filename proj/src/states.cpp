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

#include "bosind/states.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "bosind/errors.hpp"
#include "bosind/tensor_rep.hpp"

namespace bosind {

InvarianceReport invariance_defect(const DenseOperator& op) {
  const Space& space = op.space();
  InvarianceReport report;
  for (int i = 1; i < space.particles(); ++i) {
    const auto swap = Permutation::transposition(space.particles(), i, i + 1);
    const double defect = (conjugate_by(swap, space, op.matrix()) - op.matrix()).norm();
    if (i == 1 || defect > report.worst_defect) {
      report.worst_defect = defect;
      report.worst_position = i;
    }
  }
  return report;
}

bool is_invariant(const DenseOperator& op, double tol) {
  return invariance_defect(op).worst_defect < tol;
}

Matrix twirl(const Space& space, const Matrix& x) {
  const auto perms = permutations(space.particles());
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (const auto& p : perms) out += conjugate_by(p, space, x);
  return out / static_cast<double>(perms.size());
}

namespace {

// Distinct rearrangements of l, in lexicographic order.
std::vector<ModeAssignment> orbit(ModeAssignment l) {
  std::sort(l.begin(), l.end());
  std::vector<ModeAssignment> out;
  do {
    out.push_back(l);
  } while (std::next_permutation(l.begin(), l.end()));
  return out;
}

}  // namespace

InvariantState pure_state(const Space& space, const Vector& v) {
  const double n2 = v.squaredNorm();
  if (n2 <= 0.0) throw Error(ErrorKind::Validation, "pure_state: zero vector");
  return InvariantState::certify(space, v * v.adjoint() / n2);
}

InvariantState mixture(const std::vector<std::pair<double, InvariantState>>& terms) {
  if (terms.empty()) throw Error(ErrorKind::Validation, "mixture: no terms");
  const Space space = terms.front().second.space();
  Matrix m = Matrix::Zero(space.idim(), space.idim());
  for (const auto& [w, rho] : terms) {
    if (!(rho.space() == space)) throw Error(ErrorKind::Shape, "mixture: states on different spaces");
    if (w < 0.0) throw Error(ErrorKind::Validation, "mixture: negative weight");
    m += w * rho.matrix();
  }
  return InvariantState::certify(space, std::move(m));
}

InvariantState dicke_state(const ModeAssignment& l, int modes) {
  const Space space(modes, static_cast<int>(l.size()));
  space.index(l);  // validates
  Vector v = Vector::Zero(space.idim());
  for (const auto& arrangement : orbit(l)) v(static_cast<Eigen::Index>(space.index(arrangement))) = 1.0;
  return pure_state(space, v);
}

InvariantState antisymmetric_state(int particles) {
  const Space space(particles, particles);
  ModeAssignment base(static_cast<std::size_t>(particles));
  for (int i = 0; i < particles; ++i) base[static_cast<std::size_t>(i)] = i + 1;
  const Vector e = Vector::Unit(space.idim(), static_cast<Eigen::Index>(space.index(base)));
  Vector v = Vector::Zero(space.idim());
  for (const auto& p : permutations(particles)) v += static_cast<double>(p.sign()) * apply(p, space, e);
  return pure_state(space, v);
}

InvariantState classical_mixture(const ModeAssignment& l, int modes) {
  const Space space(modes, static_cast<int>(l.size()));
  space.index(l);
  const auto arrangements = orbit(l);
  Matrix m = Matrix::Zero(space.idim(), space.idim());
  const double w = 1.0 / static_cast<double>(arrangements.size());
  for (const auto& a : arrangements) {
    const auto i = static_cast<Eigen::Index>(space.index(a));
    m(i, i) = w;
  }
  return InvariantState::certify(space, std::move(m));
}

InvariantState random_invariant_state(const Space& space, std::mt19937_64& rng, int rank) {
  const int r = rank <= 0 ? space.idim() : rank;
  const Matrix g = linalg::ginibre(space.idim(), r, rng);
  Matrix sigma = g * g.adjoint();
  sigma /= sigma.trace().real();
  Matrix rho = twirl(space, sigma);
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return InvariantState::certify(space, std::move(rho));
}

Eigenspaces spectral_eigenspaces(const InvariantState& rho, double tol) {
  const auto eig = linalg::eigh(rho.matrix());
  const Eigen::Index dim = eig.values.size();
  Eigenspaces out;
  // Walk eigenvalues from the top; a new cluster starts at every gap > tol.
  std::vector<std::vector<Eigen::Index>> clusters;
  double previous = 0.0;
  for (Eigen::Index i = dim - 1; i >= 0; --i) {
    const double v = eig.values(i);
    if (v <= tol) break;
    if (clusters.empty() || previous - v > tol) clusters.emplace_back();
    clusters.back().push_back(i);
    previous = v;
  }
  double last_mean = 0.0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& idx = clusters[c];
    Eigenspace space;
    space.rank = static_cast<int>(idx.size());
    space.basis = Matrix(dim, space.rank);
    double sum = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      space.basis.col(static_cast<Eigen::Index>(k)) = eig.vectors.col(idx[k]);
      sum += eig.values(idx[k]);
    }
    space.eigenvalue = sum / static_cast<double>(idx.size());
    if (c > 0) {
      const double gap = eig.values(clusters[c - 1].back()) - eig.values(idx.front());
      if (gap < 10.0 * tol) {
        out.degeneracy_warning = true;
        out.warning = "eigenvalue clusters " + std::to_string(last_mean) + " and " +
                      std::to_string(space.eigenvalue) + " are separated by less than 10*tol";
      }
    }
    last_mean = space.eigenvalue;
    out.spaces.push_back(std::move(space));
  }
  // Eigenvalues just above the cutoff are ambiguous between range and kernel.
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double v = eig.values(i);
    if (v > 0.1 * tol && v < 10.0 * tol) {
      out.degeneracy_warning = true;
      out.warning = "eigenvalue " + std::to_string(v) + " lies within 10*tol of zero";
    }
  }
  return out;
}

Matrix Purification::amplitude_matrix() const {
  const Eigen::Index d = space.idim();
  Matrix psi(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) psi(i, j) = amplitudes(i * d + j);
  }
  return psi;
}

Matrix Purification::reduced_first() const {
  const Matrix psi = amplitude_matrix();
  return psi * psi.adjoint();
}

Matrix Purification::reduced_second() const {
  const Matrix psi = amplitude_matrix();
  return (psi.adjoint() * psi).transpose();
}

Purification symmetric_purification(const InvariantState& rho) {
  const Space& space = rho.space();
  const Eigen::Index d = space.idim();
  // psi(i, j) = <i|<j| (1 ⊗ sqrt(rho)^T) sum_k |k>|k> = sqrt(rho)^T(j, i) = sqrt(rho)(i, j).
  const Matrix root = linalg::sqrt_psd(rho.matrix(), 1e-10);
  Vector amps(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) amps(i * d + j) = root(i, j);
  }
  return Purification{space, std::move(amps)};
}

}  // namespace bosind
