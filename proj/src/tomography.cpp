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

#include "bosind/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "bosind/errors.hpp"
#include "bosind/states.hpp"
#include "bosind/symgroup.hpp"
#include "bosind/tensor_rep.hpp"

namespace bosind {

std::uint64_t invariant_dimension(int modes, int particles) {
  if (modes < 1 || particles < 1) throw Error(ErrorKind::Domain, "invariant_dimension needs M, N >= 1");
  return binomial(particles + modes * modes - 1, modes * modes - 1);
}

std::vector<Matrix> hermitian_basis(int modes) {
  if (modes < 1) throw Error(ErrorKind::Domain, "hermitian_basis needs M >= 1");
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  std::vector<Matrix> basis;
  for (int j = 0; j < modes; ++j) {
    Matrix e = Matrix::Zero(modes, modes);
    e(j, j) = 1.0;
    basis.push_back(std::move(e));
  }
  for (int j = 0; j < modes; ++j) {
    for (int k = j + 1; k < modes; ++k) {
      Matrix re = Matrix::Zero(modes, modes);
      re(j, k) = r;
      re(k, j) = r;
      Matrix im = Matrix::Zero(modes, modes);
      im(k, j) = i * r;
      im(j, k) = -i * r;
      basis.push_back(std::move(re));
      basis.push_back(std::move(im));
    }
  }
  return basis;
}

std::vector<std::vector<int>> j_indices(int modes, int particles) {
  std::vector<std::vector<int>> out;
  for (auto& occ : occupations(modes * modes, particles)) out.push_back(std::move(occ.counts));
  return out;
}

std::vector<Matrix> j_basis(int modes, int particles) {
  const Space space(modes, particles);
  const auto g = hermitian_basis(modes);
  std::vector<Matrix> out;
  for (const auto& n : j_indices(modes, particles)) {
    Matrix product = Matrix::Ones(1, 1);
    double stabiliser = 1.0;
    for (std::size_t j = 0; j < n.size(); ++j) {
      stabiliser *= static_cast<double>(factorial(n[j]));
      for (int rep = 0; rep < n[j]; ++rep) product = Eigen::kroneckerProduct(product, g[j]).eval();
    }
    // twirl averages over N!; J(n) sums over it.
    out.push_back(twirl(space, product) * (static_cast<double>(factorial(particles)) / stabiliser));
  }
  return out;
}

namespace {

RealVector hermitian_coordinates(const Matrix& a, const std::vector<Matrix>& g) {
  RealVector lambda(static_cast<Eigen::Index>(g.size()));
  for (std::size_t j = 0; j < g.size(); ++j) lambda(static_cast<Eigen::Index>(j)) = (g[j] * a).trace().real();
  return lambda;
}

BasisCertificate certify_coefficients(RealMatrix& rows) {
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    const double norm = rows.row(i).norm();
    if (norm > 0.0) rows.row(i) /= norm;
  }
  BasisCertificate cert;
  cert.abs_det = std::abs(rows.fullPivLu().determinant());
  const Eigen::JacobiSVD<RealMatrix> svd(rows);
  const auto& s = svd.singularValues();
  const double smallest = s(s.size() - 1);
  cert.condition = smallest > 0.0 ? s(0) / smallest : std::numeric_limits<double>::infinity();
  cert.ok = cert.abs_det > 1e-12 && cert.condition < 1e8;
  return cert;
}

Matrix random_hermitian(int modes, const std::vector<Matrix>& g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix a = Matrix::Zero(modes, modes);
  for (const auto& gj : g) a += normal(rng) * gj;
  return a;
}

}  // namespace

ObservableBasis ObservableBasis::from_observables(std::vector<Matrix> observables, int particles) {
  if (observables.empty()) throw Error(ErrorKind::Validation, "observable basis is empty");
  const auto modes = static_cast<int>(observables.front().rows());
  const auto g = hermitian_basis(modes);
  const auto indices = j_indices(modes, particles);
  const auto k = static_cast<Eigen::Index>(indices.size());
  if (static_cast<Eigen::Index>(observables.size()) != k) {
    throw Error(ErrorKind::Shape, "observable basis needs K = " + std::to_string(k) + " elements, got " +
                                      std::to_string(observables.size()));
  }
  ObservableBasis basis;
  basis.modes = modes;
  basis.particles = particles;
  basis.coefficients = RealMatrix(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Matrix& a = observables[static_cast<std::size_t>(i)];
    if (a.rows() != modes || a.cols() != modes) throw Error(ErrorKind::Shape, "observables must be M x M");
    if (linalg::hermiticity_defect(a) > 1e-12) throw Error(ErrorKind::Validation, "observable is not hermitian");
    const RealVector lambda = hermitian_coordinates(a, g);
    for (Eigen::Index c = 0; c < k; ++c) {
      double v = 1.0;
      const auto& n = indices[static_cast<std::size_t>(c)];
      for (std::size_t j = 0; j < n.size(); ++j) v *= std::pow(lambda(static_cast<Eigen::Index>(j)), n[j]);
      basis.coefficients(i, c) = v;
    }
  }
  RealMatrix normalised = basis.coefficients;
  basis.certificate = certify_coefficients(normalised);
  basis.observables = std::move(observables);
  return basis;
}

ObservableBasis random_observable_basis(int modes, int particles, std::uint64_t seed) {
  const Space guard(modes, particles);
  const auto g = hermitian_basis(modes);
  const auto k = invariant_dimension(modes, particles);
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Matrix> obs;
    for (std::uint64_t i = 0; i < k; ++i) obs.push_back(random_hermitian(modes, g, rng));
    auto basis = ObservableBasis::from_observables(std::move(obs), particles);
    if (basis.certificate.ok) return basis;
  }
  throw Error(ErrorKind::Conditioning, "no well-conditioned observable basis after 32 draws");
}

std::vector<Matrix> measurement_settings(const ObservableBasis& basis) {
  std::vector<Matrix> out;
  for (const auto& a : basis.observables) out.push_back(linalg::eigh(a).vectors.adjoint());
  return out;
}

std::vector<ExperimentRecord> simulate_records(const InvariantState& rho, const std::vector<Matrix>& unitaries) {
  std::vector<ExperimentRecord> out;
  for (const auto& u : unitaries) out.push_back({u, outcome_distribution(rho, u)});
  return out;
}

Reconstruction reconstruct_state(const std::vector<ExperimentRecord>& records, int modes, int particles) {
  const Space space(modes, particles);
  if (records.empty()) throw Error(ErrorKind::Underdetermined, "no experiment records");
  const auto js = j_basis(modes, particles);
  const auto indices = j_indices(modes, particles);
  const auto k = static_cast<Eigen::Index>(js.size());
  const auto outcomes = occupations(modes, particles);
  const auto per_record = static_cast<Eigen::Index>(outcomes.size());

  RealMatrix design(per_record * static_cast<Eigen::Index>(records.size()), k);
  RealVector probs(design.rows());
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.unitary.rows() != modes || rec.unitary.cols() != modes) {
      throw Error(ErrorKind::Shape, "record " + std::to_string(r) + ": unitary is not M x M");
    }
    if (!linalg::is_unitary(rec.unitary, 1e-10)) {
      throw Error(ErrorKind::Validation, "record " + std::to_string(r) + ": matrix is not unitary");
    }
    const auto& dist = rec.distribution;
    if (dist.modes != modes || dist.particles != particles || dist.outcomes.size() != outcomes.size()) {
      throw Error(ErrorKind::Shape, "record " + std::to_string(r) + ": distribution does not match (M, N)");
    }
    double total = 0.0;
    for (double p : dist.probabilities) total += p;
    if (std::abs(total - 1.0) > 1e-9) {
      throw Error(ErrorKind::Validation, "record " + std::to_string(r) + ": probabilities sum to " +
                                             std::to_string(total));
    }
    const Matrix big = tensor_power(rec.unitary, particles);
    for (Eigen::Index c = 0; c < k; ++c) {
      const Matrix left = big * js[static_cast<std::size_t>(c)];
      const RealVector diag = left.cwiseProduct(big.conjugate()).rowwise().sum().real();
      for (Eigen::Index o = 0; o < per_record; ++o) {
        ModeAssignment l = outcomes[static_cast<std::size_t>(o)].assignment();
        double v = 0.0;
        do {
          v += diag(static_cast<Eigen::Index>(space.index(l)));
        } while (std::next_permutation(l.begin(), l.end()));
        design(static_cast<Eigen::Index>(r) * per_record + o, c) = v;
      }
    }
    for (Eigen::Index o = 0; o < per_record; ++o) {
      probs(static_cast<Eigen::Index>(r) * per_record + o) =
          dist.probability(outcomes[static_cast<std::size_t>(o)]);
    }
  }

  Eigen::JacobiSVD<RealMatrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-10 * std::max(s(0), 1.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > cutoff ? 1 : 0;
  if (rank < k) {
    std::string message = "design has rank " + std::to_string(rank) + " < K = " + std::to_string(k) +
                          "; null directions dominated by J(n) with n =";
    const auto& v = svd.matrixV();
    for (Eigen::Index col = rank; col < k; ++col) {
      Eigen::Index arg = 0;
      v.col(col).cwiseAbs().maxCoeff(&arg);
      message += " (";
      const auto& n = indices[static_cast<std::size_t>(arg)];
      for (std::size_t j = 0; j < n.size(); ++j) message += (j ? "," : "") + std::to_string(n[j]);
      message += ")";
    }
    throw Error(ErrorKind::Underdetermined, message);
  }
  const RealVector x = svd.solve(probs);

  Matrix rho = Matrix::Zero(space.idim(), space.idim());
  for (Eigen::Index c = 0; c < k; ++c) rho += x(c) * js[static_cast<std::size_t>(c)];
  rho = 0.5 * (rho + rho.adjoint());
  const auto eig = linalg::eigh(rho);
  RealVector vals = eig.values;
  double clipped = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < 0.0) {
      clipped -= vals(i);
      vals(i) = 0.0;
    }
  }
  const double trace = vals.sum();
  if (trace <= 0.0) throw Error(ErrorKind::Validation, "reconstructed operator has no positive part");
  Matrix fixed = eig.vectors * (vals / trace).cast<cplx>().asDiagonal() * eig.vectors.adjoint();
  Reconstruction out{InvariantState::certify(space, std::move(fixed), 1e-8), rank, 0.0, s(s.size() - 1), s(0),
                     clipped};
  out.residual = (design * x - probs).norm();
  return out;
}

std::vector<ProductTerm> expand_invariant_two_body(const Matrix& o, int modes, std::uint64_t seed) {
  const Space space(modes, 2);
  if (o.rows() != space.idim() || o.cols() != space.idim()) {
    throw Error(ErrorKind::Shape, "two-body operator must be M^2 x M^2");
  }
  if (linalg::hermiticity_defect(o) > 1e-9) throw Error(ErrorKind::Validation, "two-body operator is not hermitian");
  const auto swap = Permutation::transposition(2, 1, 2);
  if ((conjugate_by(swap, space, o) - o).norm() > 1e-9) {
    throw Error(ErrorKind::Validation, "two-body operator is not invariant under the swap");
  }
  const auto g = hermitian_basis(modes);
  const auto k = invariant_dimension(modes, 2);
  std::mt19937_64 rng(seed);
  std::vector<Matrix> frame;
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts && frame.empty(); ++attempt) {
    std::vector<Matrix> candidate{Matrix::Identity(modes, modes)};
    while (candidate.size() < k) candidate.push_back(random_hermitian(modes, g, rng));
    if (ObservableBasis::from_observables(candidate, 2).certificate.ok) frame = std::move(candidate);
  }
  if (frame.empty()) throw Error(ErrorKind::Conditioning, "no well-conditioned product frame after 32 draws");

  const Eigen::Index d2 = static_cast<Eigen::Index>(space.dim()) * space.idim();
  Matrix columns(d2, static_cast<Eigen::Index>(frame.size()));
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Matrix aa = Eigen::kroneckerProduct(frame[i], frame[i]).eval();
    columns.col(static_cast<Eigen::Index>(i)) = aa.reshaped();
  }
  const Vector target = o.reshaped();
  const Vector c = columns.colPivHouseholderQr().solve(target);
  const double residual = (columns * c - target).norm();
  if (residual > 1e-9 * std::max(1.0, o.norm())) {
    throw Error(ErrorKind::NumericalDegeneracy, "product expansion residual " + std::to_string(residual));
  }
  std::vector<ProductTerm> terms;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const double ci = c(static_cast<Eigen::Index>(i)).real();
    if (std::abs(ci) > 1e-12) terms.push_back({ci, frame[i]});
  }
  return terms;
}

double pair_expectation(const OutcomeDistribution& dist, const RealVector& eigenvalues) {
  if (dist.particles < 2) throw Error(ErrorKind::Domain, "pair expectation needs N >= 2");
  if (eigenvalues.size() != dist.modes) throw Error(ErrorKind::Shape, "one eigenvalue per mode required");
  double sum = 0.0;
  for (std::size_t i = 0; i < dist.outcomes.size(); ++i) {
    double s1 = 0.0;
    double s2 = 0.0;
    const auto& m = dist.outcomes[i].counts;
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double a = eigenvalues(static_cast<Eigen::Index>(j));
      s1 += m[j] * a;
      s2 += m[j] * a * a;
    }
    sum += dist.probabilities[i] * 0.5 * (s1 * s1 - s2);
  }
  return sum / static_cast<double>(binomial(dist.particles, 2));
}

P2Estimate estimate_p2(const InvariantState& rho, std::uint64_t seed) {
  const Space& space = rho.space();
  if (space.particles() < 2) throw Error(ErrorKind::Domain, "p_2 needs N >= 2");
  P2Estimate out;
  out.terms = expand_invariant_two_body(partial_symmetric_projector(space.modes(), 2, 2).matrix(),
                                        space.modes(), seed);
  for (const auto& term : out.terms) {
    const auto eig = linalg::eigh(term.observable);
    const auto dist = outcome_distribution(rho, eig.vectors.adjoint());
    out.value += term.coefficient * pair_expectation(dist, eig.values);
  }
  return out;
}

}  // namespace bosind
