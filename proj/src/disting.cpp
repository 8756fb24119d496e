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

#include "bosind/disting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>

#include "bosind/errors.hpp"
#include "bosind/states.hpp"
#include "bosind/tensor_rep.hpp"

namespace bosind {

cplx CharacterProfile::value(const CycleType& mu) const {
  for (const auto& [type, v] : values) {
    if (type == mu) return v;
  }
  throw Error(ErrorKind::Validation, "no class " + mu.str() + " in the profile");
}

double CharacterProfile::off_identity() const {
  double worst = 0.0;
  for (const auto& [type, v] : values) {
    if (type.rows() != type.size()) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

CharacterProfile character_profile(const DenseOperator& projector) {
  const Space& space = projector.space();
  const Matrix& p = projector.matrix();
  if ((p * p - p).norm() > 1e-8 || linalg::hermiticity_defect(p) > 1e-8) {
    throw Error(ErrorKind::Validation, "character_profile: operator is not an orthogonal projector");
  }
  const int n = space.particles();
  for (int i = 1; i < n; ++i) {
    const auto s = Permutation::transposition(n, i, i + 1);
    const double defect = (conjugate_by(s, space, p) - p).norm();
    if (defect > 1e-8) {
      throw Error(ErrorKind::Invariance, "projector does not commute with transposition (" +
                                             std::to_string(i) + " " + std::to_string(i + 1) +
                                             "), defect " + std::to_string(defect));
    }
  }
  std::map<CycleType, std::vector<cplx>> by_class;
  for (const auto& pi : permutations(n)) by_class[pi.cycle_type()].push_back(trace_with(pi, space, p));
  CharacterProfile profile;
  for (const auto& mu : partitions(n)) {
    const auto& vals = by_class.at(mu);
    for (const auto& v : vals) {
      if (std::abs(v - vals.front()) > 1e-9 * std::max(1.0, std::abs(vals.front()))) {
        throw Error(ErrorKind::NumericalDegeneracy, "character is not constant on class " + mu.str());
      }
    }
    cplx mean = 0.0;
    for (const auto& v : vals) mean += v;
    profile.values.emplace_back(mu, mean / static_cast<double>(vals.size()));
  }
  profile.dim = static_cast<int>(std::lround(profile.value(Partition::single_column(n)).real()));
  return profile;
}

namespace {

bool vanishes_off_identity(const CharacterProfile& profile, double tol) {
  return profile.off_identity() < tol * std::max(profile.dim, 1);
}

std::optional<int> multiplicity_of(const CharacterProfile& profile, int n) {
  const auto order = static_cast<int>(factorial(n));
  if (profile.dim % order != 0) return std::nullopt;
  return profile.dim / order;
}

bool has_distinct_entries(ModeAssignment l) {
  std::sort(l.begin(), l.end());
  return std::adjacent_find(l.begin(), l.end()) == l.end();
}

// Orbit representatives if the projector already is a sum of computational
// orbit projectors of distinct-entry assignments.
std::optional<std::vector<ModeAssignment>> canonical_support(const Space& space, const Matrix& p) {
  const Eigen::Index d = space.idim();
  std::set<ModeAssignment> support;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const cplx target = i == j ? p(i, i) : cplx(0.0);
      if (i != j && std::abs(p(i, j)) > 1e-10) return std::nullopt;
      if (i == j && std::abs(target) > 1e-10 && std::abs(target - 1.0) > 1e-10) return std::nullopt;
    }
    if (std::abs(p(i, i)) > 0.5) support.insert(space.assignment(static_cast<std::size_t>(i)));
  }
  std::vector<ModeAssignment> reps;
  for (const auto& l : support) {
    if (!has_distinct_entries(l)) return std::nullopt;
    ModeAssignment sorted = l;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != l) continue;
    ModeAssignment a = sorted;
    do {
      if (!support.count(a)) return std::nullopt;
    } while (std::next_permutation(a.begin(), a.end()));
    reps.push_back(sorted);
  }
  return reps;
}

// Columns D(pi)|l_j>, pi in lexicographic order inside each j.
Matrix orbit_columns(const Space& space, const std::vector<ModeAssignment>& reps) {
  const auto perms = permutations(space.particles());
  Matrix c = Matrix::Zero(space.idim(), static_cast<Eigen::Index>(reps.size() * perms.size()));
  Eigen::Index col = 0;
  for (const auto& l : reps) {
    const auto base = static_cast<std::uint32_t>(space.index(l));
    for (const auto& pi : perms) {
      c(static_cast<Eigen::Index>(index_map(pi, space)[base]), col++) = 1.0;
    }
  }
  return c;
}

// The same column layout built from arbitrary vectors.
Matrix orbit_columns(const Space& space, const Matrix& vectors) {
  const auto perms = permutations(space.particles());
  Matrix a(space.idim(), vectors.cols() * static_cast<Eigen::Index>(perms.size()));
  Eigen::Index col = 0;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    for (const auto& pi : perms) a.col(col++) = apply(pi, space, vectors.col(j));
  }
  return a;
}

struct Plan {
  Eigenspaces spectrum;
  std::vector<std::vector<ModeAssignment>> assignments;
  std::vector<bool> already_canonical;
};

Plan plan_assignments(const InvariantState& rho, const Eigenspaces& spectrum,
                      const std::vector<int>& multiplicities) {
  const Space& space = rho.space();
  Plan plan{spectrum, std::vector<std::vector<ModeAssignment>>(spectrum.spaces.size()),
            std::vector<bool>(spectrum.spaces.size(), false)};
  std::vector<ModeAssignment> reserved;
  for (std::size_t k = 0; k < spectrum.spaces.size(); ++k) {
    auto reps = canonical_support(space, spectrum.spaces[k].projector());
    if (reps && static_cast<int>(reps->size()) == multiplicities[k]) {
      plan.already_canonical[k] = true;
      plan.assignments[k] = *reps;
      reserved.insert(reserved.end(), reps->begin(), reps->end());
    }
  }
  std::vector<int> counts;
  for (std::size_t k = 0; k < spectrum.spaces.size(); ++k) {
    counts.push_back(plan.already_canonical[k] ? 0 : multiplicities[k]);
  }
  auto fresh = allocate_assignments(counts, space.modes(), space.particles(), reserved);
  for (std::size_t k = 0; k < spectrum.spaces.size(); ++k) {
    if (!plan.already_canonical[k]) plan.assignments[k] = std::move(fresh[k]);
  }
  return plan;
}

}  // namespace

int regular_multiplicity(const DenseOperator& projector) {
  const auto profile = character_profile(projector);
  if (!vanishes_off_identity(profile, 1e-8)) {
    throw Error(ErrorKind::NotRegular, "character does not vanish off the identity (largest " +
                                           std::to_string(profile.off_identity()) + ")");
  }
  const int n = projector.space().particles();
  const auto i = multiplicity_of(profile, n);
  if (!i) {
    throw Error(ErrorKind::NotRegular, "rank " + std::to_string(profile.dim) + " is not a multiple of " +
                                           std::to_string(factorial(n)));
  }
  return *i;
}

std::vector<std::vector<ModeAssignment>> allocate_assignments(const std::vector<int>& counts, int modes,
                                                              int particles,
                                                              const std::vector<ModeAssignment>& reserved) {
  if (modes < particles) throw Error(ErrorKind::Domain, "distinct-mode assignments need M >= N");
  const std::set<ModeAssignment> taken(reserved.begin(), reserved.end());
  std::vector<std::vector<ModeAssignment>> out(counts.size());
  // Walk the strictly increasing tuples in lexicographic order via bitmasks
  // over a reversed selector.
  std::vector<bool> select(static_cast<std::size_t>(modes), false);
  std::fill(select.begin(), select.begin() + particles, true);
  std::size_t slot = 0;
  int filled = 0;
  while (slot < counts.size() && filled >= counts[slot]) {
    ++slot;
    filled = 0;
  }
  do {
    if (slot >= counts.size()) break;
    ModeAssignment l;
    for (int m = 0; m < modes; ++m) {
      if (select[static_cast<std::size_t>(m)]) l.push_back(m + 1);
    }
    if (taken.count(l)) continue;
    out[slot].push_back(std::move(l));
    ++filled;
    while (slot < counts.size() && filled >= counts[slot]) {
      ++slot;
      filled = 0;
    }
  } while (std::prev_permutation(select.begin(), select.end()));
  if (slot < counts.size()) {
    throw Error(ErrorKind::NotDistinguishable, "not enough distinct-mode assignments for the requested multiplicities");
  }
  return out;
}

Certificate is_perfectly_distinguishable(const InvariantState& rho, double tol) {
  const Space& space = rho.space();
  const int n = space.particles();
  const auto spectrum = spectral_eigenspaces(rho, tol);
  Certificate cert;
  cert.degeneracy_warning = spectrum.degeneracy_warning;
  cert.warning = spectrum.warning;
  cert.distinguishable = true;
  for (std::size_t k = 0; k < spectrum.spaces.size(); ++k) {
    const auto& es = spectrum.spaces[k];
    EigenspaceVerdict v;
    v.eigenvalue = es.eigenvalue;
    v.rank = es.rank;
    v.profile = character_profile(DenseOperator(space, es.projector()));
    v.regular = vanishes_off_identity(v.profile, tol);
    if (v.regular) {
      const auto i = multiplicity_of(v.profile, n);
      v.regular = i.has_value();
      v.multiplicity = i.value_or(0);
    }
    if (!v.regular && cert.distinguishable) {
      cert.distinguishable = false;
      cert.witness_eigenspace = static_cast<int>(k);
      // Largest violation among the non-identity classes.
      double worst = -1.0;
      for (const auto& [mu, value] : v.profile.values) {
        if (mu.rows() == n) continue;
        if (std::abs(value) > worst) {
          worst = std::abs(value);
          cert.witness_cycle_type = mu;
          cert.witness_value = value;
        }
      }
      if (!cert.witness_cycle_type) cert.witness_cycle_type = Partition::single_column(n);
    }
    cert.eigenspaces.push_back(std::move(v));
  }
  const Matrix ps = symmetric_projector(space.modes(), n).matrix();
  cert.symmetric_weight = (ps * rho.matrix()).trace().real();
  cert.symmetric_weight_matches =
      std::abs(cert.symmetric_weight - 1.0 / static_cast<double>(factorial(n))) < tol;
  if (cert.distinguishable) {
    for (const auto& v : cert.eigenspaces) cert.multiplicities.push_back(v.multiplicity);
    cert.assignments = plan_assignments(rho, spectrum, cert.multiplicities).assignments;
  }
  return cert;
}

CanonicalForm canonical_form(const InvariantState& rho, std::uint64_t seed, double tol) {
  const Space& space = rho.space();
  const int n = space.particles();
  if (space.modes() < n) throw Error(ErrorKind::NotDistinguishable, "canonical_form needs M >= N");
  const auto cert = is_perfectly_distinguishable(rho, tol);
  if (!cert.distinguishable) {
    throw Error(ErrorKind::NotDistinguishable,
                "state fails the character condition on eigenspace " +
                    std::to_string(cert.witness_eigenspace.value_or(-1)) + ", class " +
                    (cert.witness_cycle_type ? cert.witness_cycle_type->str() : std::string("?")));
  }
  const auto spectrum = spectral_eigenspaces(rho, tol);
  const Plan plan = plan_assignments(rho, spectrum, cert.multiplicities);
  const Eigen::Index d = space.idim();
  std::mt19937_64 rng(seed);

  Matrix u = Matrix::Zero(d, d);
  Matrix source_used = Matrix::Zero(d, d);
  Matrix target_used = Matrix::Zero(d, d);
  CanonicalForm out;
  out.target = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < spectrum.spaces.size(); ++k) {
    const auto& es = spectrum.spaces[k];
    const Matrix c = orbit_columns(space, plan.assignments[k]);
    Matrix b;
    if (plan.already_canonical[k]) {
      b = c;
    } else {
      const auto copies = static_cast<Eigen::Index>(cert.multiplicities[k]);
      constexpr int kAttempts = 8;
      for (int attempt = 0; attempt < kAttempts && b.size() == 0; ++attempt) {
        Matrix v = es.basis * linalg::ginibre(es.rank, static_cast<int>(copies), rng);
        for (Eigen::Index j = 0; j < copies; ++j) v.col(j).normalize();
        const Matrix a = orbit_columns(space, v);
        try {
          b = a * linalg::inv_sqrt_pd(a.adjoint() * a, 1e-10);
        } catch (const Error&) {
          b.resize(0, 0);
        }
      }
      if (b.size() == 0) {
        throw Error(ErrorKind::NumericalDegeneracy,
                    "orbit Gram matrix singular in eigenspace " + std::to_string(k) + " after retries");
      }
    }
    u += c * b.adjoint();
    source_used += b * b.adjoint();
    target_used += c * c.adjoint();
    out.target += es.eigenvalue * c * c.adjoint();
  }

  // Kernel of rho onto the unused part of the computational basis, matched
  // per isotypic component with frames that share their K_lambda coefficients.
  const Matrix id = Matrix::Identity(d, d);
  const Matrix source_rest = id - source_used;
  const Matrix target_rest = id - target_used;
  for (const auto& lam : partitions(n, space.modes())) {
    const auto full = isotypic_frame(lam, space.modes());
    const auto from = isotypic_frame(full, source_rest);
    const auto to = isotypic_frame(full, target_rest);
    if (from.multiplicity != to.multiplicity) {
      throw Error(ErrorKind::NumericalDegeneracy,
                  "complement multiplicities differ for " + lam.str() + ": " +
                      std::to_string(from.multiplicity) + " vs " + std::to_string(to.multiplicity));
    }
    if (from.multiplicity == 0) continue;
    u += to.embedding() * from.embedding().adjoint();
  }

  if (!linalg::is_unitary(u, 1e-8)) {
    throw Error(ErrorKind::NumericalDegeneracy, "assembled canonical unitary is not unitary");
  }
  out.unitary = std::move(u);
  out.assignments = plan.assignments;
  out.canonical = out.unitary * rho.matrix() * out.unitary.adjoint();
  return out;
}

InvariantState counterexample_state() {
  const double a = 1.0 / 6.0;
  const double b = 1.0 / 9.0;
  const double c = -5.0 / 90.0;
  const double block[6][6] = {
      {a, b, c, 0, 0, c}, {b, a, 0, c, c, 0}, {c, 0, a, c, b, 0},
      {0, c, c, a, 0, b}, {0, c, b, 0, a, c}, {c, 0, 0, b, c, a},
  };
  const Space space(3, 3);
  std::vector<std::size_t> basis;
  ModeAssignment l{1, 2, 3};
  do {
    basis.push_back(space.index(l));
  } while (std::next_permutation(l.begin(), l.end()));
  Matrix m = Matrix::Zero(space.idim(), space.idim());
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      m(static_cast<Eigen::Index>(basis[i]), static_cast<Eigen::Index>(basis[j])) = block[i][j];
    }
  }
  return InvariantState::certify(space, std::move(m));
}

InvariantState counterexample_root_state() {
  const auto rho = counterexample_state();
  Matrix root = linalg::sqrt_psd(rho.matrix());
  root /= root.trace().real();
  return InvariantState::certify(rho.space(), std::move(root));
}

}  // namespace bosind
