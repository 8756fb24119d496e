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

#include "bosind/tensor_rep.hpp"

#include <cmath>
#include <string>

#include "bosind/errors.hpp"

namespace bosind {

std::vector<std::uint32_t> index_map(const Permutation& p, const Space& space) {
  const int n = space.particles();
  if (p.size() != n) {
    throw Error(ErrorKind::Shape, "permutation degree " + std::to_string(p.size()) +
                                      " does not match N = " + std::to_string(n));
  }
  const auto m = static_cast<std::uint32_t>(space.modes());
  // weight[slot] = M^(N-1-slot)
  std::vector<std::uint32_t> weight(static_cast<std::size_t>(n));
  std::uint32_t w = 1;
  for (int slot = n - 1; slot >= 0; --slot) {
    weight[static_cast<std::size_t>(slot)] = w;
    w *= m;
  }
  std::vector<std::uint32_t> out(space.dim());
  for (std::size_t b = 0; b < space.dim(); ++b) {
    std::uint32_t a = 0;
    auto rest = static_cast<std::uint32_t>(b);
    for (int slot = n - 1; slot >= 0; --slot) {
      const std::uint32_t digit = rest % m;
      rest /= m;
      a += digit * weight[static_cast<std::size_t>(p(slot))];
    }
    out[b] = a;
  }
  return out;
}

Matrix group_sum(const Space& space, const std::vector<Permutation>& elements,
                 const std::function<cplx(const Permutation&)>& coeff) {
  Matrix out = Matrix::Zero(space.idim(), space.idim());
  for (const auto& p : elements) {
    const cplx c = coeff(p);
    if (c == cplx(0.0)) continue;
    const auto map = index_map(p, space);
    for (std::size_t b = 0; b < map.size(); ++b) {
      out(static_cast<Eigen::Index>(map[b]), static_cast<Eigen::Index>(b)) += c;
    }
  }
  return out;
}

Matrix conjugate_by(const Permutation& p, const Space& space, const Matrix& x) {
  const auto map = index_map(p, space);
  Matrix out(x.rows(), x.cols());
  for (Eigen::Index b = 0; b < x.cols(); ++b) {
    for (Eigen::Index a = 0; a < x.rows(); ++a) {
      out(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) = x(a, b);
    }
  }
  return out;
}

cplx trace_with(const Permutation& p, const Space& space, const Matrix& x) {
  const auto map = index_map(p, space);
  cplx t = 0.0;
  for (std::size_t c = 0; c < map.size(); ++c) {
    t += x(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(map[c]));
  }
  return t;
}

Vector apply(const Permutation& p, const Space& space, const Vector& v) {
  const auto map = index_map(p, space);
  Vector out(v.size());
  for (std::size_t b = 0; b < map.size(); ++b) {
    out(static_cast<Eigen::Index>(map[b])) = v(static_cast<Eigen::Index>(b));
  }
  return out;
}

DenseOperator perm_operator(const Permutation& p, int modes) {
  const Space space(modes, p.size());
  return DenseOperator(space, group_sum(space, {p}, [](const Permutation&) { return cplx(1.0); }));
}

DenseOperator symmetric_projector(int modes, int particles) {
  const Space space(modes, particles);
  const double w = 1.0 / static_cast<double>(factorial(particles));
  return DenseOperator(space, group_sum(space, permutations(particles),
                                        [w](const Permutation&) { return cplx(w); }));
}

DenseOperator antisymmetric_projector(int modes, int particles) {
  const Space space(modes, particles);
  const double w = 1.0 / static_cast<double>(factorial(particles));
  return DenseOperator(space, group_sum(space, permutations(particles), [w](const Permutation& p) {
                         return cplx(w * p.sign());
                       }));
}

DenseOperator partial_symmetric_projector(int modes, int particles, int k) {
  if (k < 1 || k > particles) {
    throw Error(ErrorKind::Domain, "partial_symmetric_projector: k must be in [1, N]");
  }
  const Space space(modes, particles);
  std::vector<Permutation> sub;
  for (const auto& q : permutations(k)) {
    auto im = Permutation::identity(particles).images();
    for (int i = 0; i < k; ++i) im[static_cast<std::size_t>(i)] = q(i);
    sub.push_back(Permutation::from_images(std::move(im)));
  }
  const double w = 1.0 / static_cast<double>(factorial(k));
  return DenseOperator(space, group_sum(space, sub, [w](const Permutation&) { return cplx(w); }));
}

DenseOperator young_symmetrizer(const YoungTableau& tableau, int modes) {
  if (!tableau.is_standard()) {
    throw Error(ErrorKind::Validation, "young_symmetrizer: tableau is not standard");
  }
  const Space space(modes, tableau.size());
  const auto rows = tableau.row_group();
  const auto cols = tableau.column_group();
  Matrix out = Matrix::Zero(space.idim(), space.idim());
  for (const auto& g : rows) {
    for (const auto& h : cols) {
      const auto map = index_map(g * h, space);
      const double s = h.sign();
      for (std::size_t b = 0; b < map.size(); ++b) {
        out(static_cast<Eigen::Index>(map[b]), static_cast<Eigen::Index>(b)) += s;
      }
    }
  }
  return DenseOperator(space, std::move(out));
}

DenseOperator transposition_mean(int modes, int particles) {
  if (particles < 2) throw Error(ErrorKind::Domain, "transposition_mean requires N >= 2");
  const Space space(modes, particles);
  std::vector<Permutation> swaps;
  for (int i = 1; i <= particles; ++i) {
    for (int j = i + 1; j <= particles; ++j) swaps.push_back(Permutation::transposition(particles, i, j));
  }
  const double w = 1.0 / static_cast<double>(swaps.size());
  return DenseOperator(space, group_sum(space, swaps, [w](const Permutation&) { return cplx(w); }));
}

DenseOperator isotypic_projector(const Partition& lam, int modes, int particles) {
  if (lam.size() != particles) {
    throw Error(ErrorKind::Shape, "isotypic_projector: " + lam.str() + " is not a partition of " +
                                      std::to_string(particles));
  }
  const Space space(modes, particles);
  const double w = static_cast<double>(hook_dimension(lam)) / static_cast<double>(factorial(particles));
  return DenseOperator(space, group_sum(space, permutations(particles), [&](const Permutation& p) {
                         return cplx(w * static_cast<double>(irrep_character(lam, p.cycle_type())));
                       }));
}

// ------------------------------------------------------------ isotypic frame

Matrix IsotypicFrame::embedding() const {
  const auto d = static_cast<Eigen::Index>(irrep_dim);
  Matrix w = Matrix::Zero(space.idim(), multiplicity * d);
  if (multiplicity == 0) return w;
  std::vector<std::vector<std::uint32_t>> maps;
  maps.reserve(generators.size());
  for (const auto& g : generators) maps.push_back(index_map(g, space));
  for (Eigen::Index i = 0; i < multiplicity; ++i) {
    for (std::size_t b = 0; b < generators.size(); ++b) {
      const auto& map = maps[b];
      for (Eigen::Index a = 0; a < d; ++a) {
        const cplx c = coefficients(static_cast<Eigen::Index>(b), a);
        if (c == cplx(0.0)) continue;
        for (std::size_t x = 0; x < map.size(); ++x) {
          w(static_cast<Eigen::Index>(map[x]), i * d + a) += c * highest(static_cast<Eigen::Index>(x), i);
        }
      }
    }
  }
  return w;
}

IsotypicFrame isotypic_frame(const Partition& lam, int modes) {
  const int n = lam.size();
  const Space space(modes, n);
  const int d = static_cast<int>(hook_dimension(lam));
  const Matrix y = young_symmetrizer(YoungTableau::row_reading(lam), modes).matrix();
  const Matrix highest = linalg::column_space(y);
  IsotypicFrame frame{lam, d, static_cast<int>(highest.cols()), highest, {}, Matrix(), space};
  if (frame.multiplicity == 0) return frame;

  // Greedy Gram-Schmidt over D(g) q0; the coefficients live in the K_lambda
  // factor only, so they are valid for every vector in range(D(Y_t)).
  const Vector q0 = highest.col(0);
  std::vector<Vector> ortho;
  std::vector<Vector> coeff;  // in the basis of chosen generators
  for (const auto& g : permutations(n)) {
    if (static_cast<int>(ortho.size()) == d) break;
    const Vector v = apply(g, space, q0);
    Vector r = v;
    const auto k = static_cast<Eigen::Index>(ortho.size());
    Vector c = Vector::Zero(k + 1);
    c(k) = 1.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      const cplx overlap = ortho[static_cast<std::size_t>(j)].dot(v);
      r -= overlap * ortho[static_cast<std::size_t>(j)];
      c.head(coeff[static_cast<std::size_t>(j)].size()) -= overlap * coeff[static_cast<std::size_t>(j)];
    }
    const double norm = r.norm();
    if (norm < 1e-6) continue;
    ortho.push_back(r / norm);
    coeff.push_back(c / norm);
    frame.generators.push_back(g);
  }
  if (static_cast<int>(ortho.size()) != d) {
    throw Error(ErrorKind::NumericalDegeneracy,
                "isotypic_frame: could not span the irrep factor of " + lam.str());
  }
  frame.coefficients = Matrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const auto& c = coeff[static_cast<std::size_t>(a)];
    frame.coefficients.col(a).head(c.size()) = c;
  }
  return frame;
}

IsotypicFrame isotypic_frame(const IsotypicFrame& full, const Matrix& invariant_projector) {
  IsotypicFrame frame = full;
  if (full.multiplicity == 0) return frame;
  const Matrix y =
      young_symmetrizer(YoungTableau::row_reading(full.shape), full.space.modes()).matrix();
  frame.highest = linalg::column_space(y * invariant_projector);
  frame.multiplicity = static_cast<int>(frame.highest.cols());
  return frame;
}

// ------------------------------------------------------------- Schur blocks

Matrix SchurBlocks::reassemble() const {
  Matrix out = Matrix::Zero(space.idim(), space.idim());
  for (const auto& b : blocks) {
    if (b.embedding.cols() == 0) continue;
    const auto d = static_cast<Eigen::Index>(b.irrep_dim);
    const Eigen::Index m = b.state.rows();
    Matrix inner = Matrix::Zero(m * d, m * d);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index a = 0; a < d; ++a) inner(i * d + a, j * d + a) = b.state(i, j);
      }
    }
    out += (b.weight / static_cast<double>(d)) * b.embedding * inner * b.embedding.adjoint();
  }
  return out;
}

double SchurBlocks::weight(const Partition& lam) const {
  for (const auto& b : blocks) {
    if (b.shape == lam) return b.weight;
  }
  return 0.0;
}

SchurBlocks schur_weyl_blocks(const InvariantState& rho) {
  const Space& space = rho.space();
  const int n = space.particles();
  const Matrix& r = rho.matrix();
  SchurBlocks out{space, {}};
  for (const auto& lam : partitions(n, space.modes())) {
    const Matrix proj = isotypic_projector(lam, space.modes(), n).matrix();
    const double weight = (proj * r).trace().real();
    const auto frame = isotypic_frame(lam, space.modes());
    Matrix w = frame.embedding();
    const auto d = static_cast<Eigen::Index>(frame.irrep_dim);
    const Eigen::Index m = frame.multiplicity;
    const Matrix block = w.adjoint() * r * w;
    // Partial trace over the irrep factor leaves p_lambda * rho_lambda.
    Matrix reduced = Matrix::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index a = 0; a < d; ++a) reduced(i, j) += block(i * d + a, j * d + a);
      }
    }
    Matrix state;
    if (weight > 1e-14 && m > 0) {
      state = reduced / reduced.trace().real();
      state = 0.5 * (state + state.adjoint());
    } else {
      state = Matrix::Identity(m, m) / static_cast<double>(std::max<Eigen::Index>(m, 1));
    }
    out.blocks.push_back(SchurBlock{lam, weight, std::move(state), frame.irrep_dim, std::move(w)});
  }
  return out;
}

}  // namespace bosind
