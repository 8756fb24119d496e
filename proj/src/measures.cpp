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

#include "bosind/measures.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <type_traits>

#include "bosind/errors.hpp"
#include "bosind/states.hpp"
#include "bosind/tensor_rep.hpp"

namespace bosind {

namespace {

double symmetric_weight_on(const InvariantState& rho, const std::vector<int>& slots) {
  const int n = rho.space().particles();
  const int k = static_cast<int>(slots.size());
  if (k < 2 || k > n) {
    throw Error(ErrorKind::Domain, "p_k needs 2 <= k <= N, got k = " + std::to_string(k) +
                                       ", N = " + std::to_string(n));
  }
  std::set<int> seen;
  for (int s : slots) {
    if (s < 1 || s > n || !seen.insert(s).second) {
      throw Error(ErrorKind::Validation, "p_k slots must be distinct and within 1..N");
    }
  }
  cplx sum = 0.0;
  const auto local = permutations(k);
  for (const auto& p : local) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    for (int a = 0; a < k; ++a) {
      images[static_cast<std::size_t>(slots[static_cast<std::size_t>(a)] - 1)] =
          slots[static_cast<std::size_t>(p(a))] - 1;
    }
    sum += trace_with(Permutation::from_images(std::move(images)), rho.space(), rho.matrix());
  }
  return sum.real() / static_cast<double>(local.size());
}

void check_bound_domain(double p2, int n) {
  if (n < 2) throw Error(ErrorKind::Domain, "bounds need N >= 2");
  if (!(p2 >= 0.0 && p2 <= 1.0)) throw Error(ErrorKind::Domain, "p2 must lie in [0,1]");
}

template <typename T>
T to_scalar(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  }
}

template <typename T>
Extrema<T> vertex_lp(const T& c, int n, int modes) {
  if (n < 2) throw Error(ErrorKind::Domain, "the LP needs N >= 2");
  if (modes < 1) throw Error(ErrorKind::Domain, "the LP needs M >= 1");
  T eps{};
  if constexpr (std::is_same_v<T, double>) eps = 1e-12;
  const auto shapes = partitions(n, modes);
  std::vector<T> t;
  std::vector<bool> is_row;
  for (const auto& lam : shapes) {
    t.push_back(to_scalar<T>(transposition_eigenvalue(lam)));
    is_row.push_back(lam.rows() == 1);
  }
  std::optional<T> lo;
  std::optional<T> hi;
  auto visit = [&](const T& value) {
    if (!lo || value < *lo) lo = value;
    if (!hi || value > *hi) hi = value;
  };
  const auto abs_t = [](const T& x) { return x < T(0) ? -x : x; };
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (abs_t(t[a] - c) <= eps) visit(is_row[a] ? T(1) : T(0));
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (t[a] == t[b]) continue;
      T wa = (c - t[b]) / (t[a] - t[b]);
      if (wa < -eps || wa > T(1) + eps) continue;
      wa = std::clamp(wa, T(0), T(1));
      const T wb = T(1) - wa;
      visit(is_row[a] ? wa : (is_row[b] ? wb : T(0)));
    }
  }
  if (!lo) {
    throw Error(ErrorKind::Infeasible, "no distribution over partitions of " + std::to_string(n) +
                                           " with at most " + std::to_string(modes) +
                                           " rows has transposition mean c");
  }
  return {*lo, *hi};
}

}  // namespace

double p_k(const InvariantState& rho, int k) {
  std::vector<int> slots;
  for (int i = 1; i <= k; ++i) slots.push_back(i);
  if (k < 2 || k > rho.space().particles()) {
    throw Error(ErrorKind::Domain, "p_k needs 2 <= k <= N, got k = " + std::to_string(k) +
                                       ", N = " + std::to_string(rho.space().particles()));
  }
  return symmetric_weight_on(rho, slots);
}

double p_k_on(const InvariantState& rho, const std::vector<int>& slots) {
  return symmetric_weight_on(rho, slots);
}

IndistinguishablePart indistinguishable_part(const InvariantState& rho) {
  const Space& space = rho.space();
  const Matrix ps = symmetric_projector(space.modes(), space.particles()).matrix();
  const Matrix sandwich = ps * rho.matrix() * ps;
  const double pn = sandwich.trace().real();
  if (pn <= 1e-12) {
    throw Error(ErrorKind::NoSymmetricSupport,
                "state has no weight on the symmetric subspace (p_N = " + std::to_string(pn) + ")");
  }
  return {InvariantState::certify(space, sandwich / pn, rho.tolerance()), pn};
}

double trace_distance(const DenseOperator& a, const DenseOperator& b) {
  if (!(a.space() == b.space())) throw Error(ErrorKind::Shape, "trace_distance: operators on different spaces");
  const auto eig = linalg::eigh(a.matrix() - b.matrix());
  return 0.5 * eig.values.cwiseAbs().sum();
}

void validate_povm(const Space& space, const Povm& povm) {
  if (povm.empty()) throw Error(ErrorKind::Validation, "POVM has no elements");
  Matrix total = Matrix::Zero(space.idim(), space.idim());
  for (std::size_t k = 0; k < povm.size(); ++k) {
    const Matrix& e = povm[k];
    if (e.rows() != space.idim() || e.cols() != space.idim()) {
      throw Error(ErrorKind::Shape, "POVM element " + std::to_string(k) + " has the wrong shape");
    }
    if (linalg::hermiticity_defect(e) > 1e-9) {
      throw Error(ErrorKind::Validation, "POVM element " + std::to_string(k) + " is not hermitian");
    }
    if (linalg::eigh(e).values(0) < -1e-9) {
      throw Error(ErrorKind::Validation, "POVM element " + std::to_string(k) + " is not positive");
    }
    total += e;
  }
  const double defect = (total - Matrix::Identity(space.idim(), space.idim())).norm();
  if (defect > 1e-9) {
    throw Error(ErrorKind::Validation, "POVM elements do not sum to the identity (defect " +
                                           std::to_string(defect) + ")");
  }
}

TvBound tv_vs_bound(const InvariantState& rho, const Povm& povm) {
  validate_povm(rho.space(), povm);
  const auto ind = indistinguishable_part(rho);
  TvBound out;
  for (const auto& e : povm) {
    out.tv += std::abs((e * ind.state.matrix()).trace().real() - (e * rho.matrix()).trace().real());
  }
  out.tv *= 0.5;
  out.bound = 1.0 - ind.p_n;
  return out;
}

Povm helstrom_measurement(const InvariantState& rho) {
  const auto ind = indistinguishable_part(rho);
  const auto eig = linalg::eigh(ind.state.matrix() - rho.matrix());
  const Eigen::Index d = eig.values.size();
  Matrix positive = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (eig.values(i) > 1e-10) positive += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
  }
  return {positive, Matrix::Identity(d, d) - positive};
}

double bound_b(double p2, int n) {
  check_bound_domain(p2, n);
  return std::max(0.0, p2 * (n - 1) - (n - 2));
}

Rational bound_b(const Rational& p2, int n) {
  if (n < 2) throw Error(ErrorKind::Domain, "bounds need N >= 2");
  if (p2 < 0 || p2 > 1) throw Error(ErrorKind::Domain, "p2 must lie in [0,1]");
  return std::max(Rational(0), p2 * (n - 1) - (n - 2));
}

Rational breakpoint(int n) {
  if (n < 2) throw Error(ErrorKind::Domain, "bounds need N >= 2");
  return Rational(n - 2, n - 1);
}

Extrema<double> lp_extrema(double c, int n, int modes) { return vertex_lp<double>(c, n, modes); }

Extrema<Rational> lp_extrema(const Rational& c, int n, int modes) {
  return vertex_lp<Rational>(c, n, modes);
}

BoundResult bound_row(double p2, int n) {
  check_bound_domain(p2, n);
  BoundResult row;
  row.p2 = p2;
  row.n = n;
  row.lower = bound_b(p2, n);
  row.upper = p2;
  // c = tr[T rho] = 2 p2 - 1; M = N admits every partition.
  const auto lp = lp_extrema(2.0 * p2 - 1.0, n, n);
  row.lp_lower = lp.min;
  row.lp_upper = lp.max;
  return row;
}

std::vector<BoundResult> bounds_table(const std::vector<int>& n_list, const std::vector<double>& p2_grid) {
  std::vector<BoundResult> rows;
  rows.reserve(n_list.size() * p2_grid.size());
  for (int n : n_list) {
    for (double p2 : p2_grid) rows.push_back(bound_row(p2, n));
  }
  return rows;
}

InvariantState tight_state(double alpha, int n, TightBound which) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::Domain, "tight_state needs alpha in [0,1]");
  if (n < 2) throw Error(ErrorKind::Domain, "tight_state needs N >= 2");
  const Space space(n, n);
  ModeAssignment distinct(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) distinct[static_cast<std::size_t>(i)] = i + 1;
  const InvariantState dicke = dicke_state(distinct, n);
  Matrix other;
  if (which == TightBound::Upper) {
    other = antisymmetric_state(n).matrix();
  } else {
    const Matrix p = isotypic_projector(Partition({n - 1, 1}), n, n).matrix();
    const Matrix orbit = classical_mixture(distinct, n).matrix();  // commutes with p
    other = p * orbit * p;
    other /= other.trace().real();
  }
  Matrix m = alpha * dicke.matrix() + (1.0 - alpha) * other;
  return InvariantState::certify(space, std::move(m));
}

}  // namespace bosind
