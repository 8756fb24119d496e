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

// Small dense helpers shared by every module. Everything here is a thin layer
// over Eigen; the numerics live in Eigen itself.

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace bosind {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

namespace linalg {

// Eigen-decomposition of a hermitian matrix, eigenvalues ascending.
struct HermitianEig {
  RealVector values;
  Matrix vectors;
};

HermitianEig eigh(const Matrix& a);

double frobenius(const Matrix& a);
double hermiticity_defect(const Matrix& a);  // ||A - A^dagger||_F

// Number of eigenvalues above `cutoff` of a hermitian matrix.
int rank_hermitian(const Matrix& a, double cutoff = 1e-9);

// sqrt of a positive semidefinite hermitian matrix; eigenvalues within
// +-clip of zero are treated as roundoff and map to zero.
Matrix sqrt_psd(const Matrix& a, double clip = 1e-10);

// A^{-1/2} for a hermitian positive definite matrix. Throws
// NumericalDegeneracy if the smallest eigenvalue is below `floor`.
Matrix inv_sqrt_pd(const Matrix& a, double floor = 1e-10);

// Orthonormal basis of the range of a hermitian PSD matrix (columns),
// eigenvalues above cutoff, ordered by decreasing eigenvalue.
Matrix range_basis(const Matrix& psd, double cutoff = 1e-9);

// Orthonormal basis of the column space of an arbitrary matrix.
Matrix column_space(const Matrix& a, double rel_cutoff = 1e-9);

bool is_unitary(const Matrix& u, double tol);

// Complex standard-normal matrix (entries (x + iy)/sqrt(2)).
Matrix ginibre(int rows, int cols, std::mt19937_64& rng);

// Haar-random unitary via QR with phase correction.
Matrix haar_unitary(int dim, std::mt19937_64& rng);

}  // namespace linalg
}  // namespace bosind
