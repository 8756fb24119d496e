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

#include "bosind/linalg.hpp"

#include <cmath>
#include <string>

#include "bosind/errors.hpp"

namespace bosind {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Size: return "size";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Invariance: return "invariance";
    case ErrorKind::NoSymmetricSupport: return "no_symmetric_support";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::NotDistinguishable: return "not_distinguishable";
    case ErrorKind::NotRegular: return "not_regular";
    case ErrorKind::NumericalDegeneracy: return "numerical_degeneracy";
    case ErrorKind::Conditioning: return "conditioning";
    case ErrorKind::Underdetermined: return "underdetermined";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

namespace linalg {

HermitianEig eigh(const Matrix& a) {
  // Symmetrise first so roundoff in the input cannot leak into the solver.
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalDegeneracy, "hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double frobenius(const Matrix& a) { return a.norm(); }

double hermiticity_defect(const Matrix& a) { return (a - a.adjoint()).norm(); }

int rank_hermitian(const Matrix& a, double cutoff) {
  const auto e = eigh(a);
  int r = 0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) > cutoff) ++r;
  }
  return r;
}

Matrix sqrt_psd(const Matrix& a, double clip) {
  auto e = eigh(a);
  RealVector s(e.values.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double v = e.values(i);
    if (v < -clip) {
      throw Error(ErrorKind::Domain,
                  "sqrt_psd: eigenvalue " + std::to_string(v) + " is negative beyond roundoff");
    }
    s(i) = v > clip ? std::sqrt(v) : 0.0;
  }
  return e.vectors * s.cast<cplx>().asDiagonal() * e.vectors.adjoint();
}

Matrix inv_sqrt_pd(const Matrix& a, double floor) {
  auto e = eigh(a);
  RealVector s(e.values.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (e.values(i) < floor) {
      throw Error(ErrorKind::NumericalDegeneracy,
                  "gram matrix singular: eigenvalue " + std::to_string(e.values(i)));
    }
    s(i) = 1.0 / std::sqrt(e.values(i));
  }
  return e.vectors * s.cast<cplx>().asDiagonal() * e.vectors.adjoint();
}

Matrix range_basis(const Matrix& psd, double cutoff) {
  const auto e = eigh(psd);
  int r = 0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) > cutoff) ++r;
  }
  Matrix q(psd.rows(), r);
  // SelfAdjointEigenSolver sorts ascending; emit in decreasing order.
  for (int j = 0; j < r; ++j) q.col(j) = e.vectors.col(psd.rows() - 1 - j);
  return q;
}

Matrix column_space(const Matrix& a, double rel_cutoff) {
  if (a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_cutoff * std::max(top, 1.0)) ++r;
  }
  return svd.matrixU().leftCols(r);
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm() < tol;
}

Matrix ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = cplx(re * s, im * s);
    }
  }
  return g;
}

Matrix haar_unitary(int dim, std::mt19937_64& rng) {
  const Matrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const cplx d = r(i, i);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

}  // namespace linalg
}  // namespace bosind
