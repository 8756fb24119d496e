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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "bosind/disting.hpp"
#include "bosind/interferometer.hpp"
#include "bosind/measures.hpp"
#include "bosind/states.hpp"
#include "bosind/tensor_rep.hpp"
#include "bosind/tomography.hpp"

namespace {

using namespace bosind;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Projector on the symmetric part of the first k slots, built from
// permutation matrices directly.
Matrix leading_symmetrizer(int modes, int particles, int k) {
  const Space s(modes, particles);
  Matrix out = Matrix::Zero(s.idim(), s.idim());
  const auto sub = permutations(k);
  for (const auto& p : sub) {
    std::vector<int> images(static_cast<std::size_t>(particles));
    for (int i = 0; i < particles; ++i) images[static_cast<std::size_t>(i)] = i < k ? p(i) : i;
    out += perm_operator(Permutation::from_images(images), modes).matrix();
  }
  return out / static_cast<double>(sub.size());
}

double expectation(const Matrix& op, const InvariantState& rho) { return (op * rho.matrix()).trace().real(); }

Povm random_povm(int dim, int outcomes, std::mt19937_64& rng) {
  std::vector<Matrix> g;
  Matrix s = Matrix::Zero(dim, dim);
  for (int k = 0; k < outcomes; ++k) {
    const Matrix a = linalg::ginibre(dim, dim, rng);
    g.push_back(a * a.adjoint());
    s += g.back();
  }
  const Matrix w = linalg::inv_sqrt_pd(s);
  Povm out;
  for (const auto& gk : g) out.push_back(w * gk * w);
  return out;
}

ModeAssignment first_modes(int n) {
  ModeAssignment l(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] = i + 1;
  return l;
}

Outcome criterion_bounds() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  bool exact = true;
  for (int n : {2, 3, 4, 6, 10}) {
    for (int i = 0; i <= 100; ++i) {
      const double p2 = i / 100.0;
      const auto e = lp_extrema(2.0 * p2 - 1.0, n, n);
      worst = std::max({worst, std::abs(e.min - bound_b(p2, n)), std::abs(e.max - p2)});
    }
    const Rational knee = breakpoint(n);
    exact = exact && knee == Rational(n - 2, n - 1);
    exact = exact && lp_extrema(2 * knee - 1, n, n).min == Rational(0) && bound_b(knee, n) == Rational(0);
    exact = exact && lp_extrema(2 * (knee + Rational(1, 1000)) - 1, n, n).min > Rational(0);
    if (n > 2) exact = exact && bound_b(knee - Rational(1, 1000), n) == Rational(0);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst < 1e-9 && exact && secs < 10.0,
          fmt::format("LP extrema vs closed form, max error {:.2e}, exact breakpoints {}, {:.3f} s", worst,
                      exact ? "yes" : "no", secs)};
}

Outcome criterion_tightness() {
  double worst = 0.0;
  for (int n : {3, 4}) {
    const Matrix p2_op = leading_symmetrizer(n, n, 2);
    const Matrix pn_op = leading_symmetrizer(n, n, n);
    const double knee = (n - 2.0) / (n - 1.0);
    for (int i = 0; i <= 20; ++i) {
      const double p2 = i / 20.0;
      const auto up = tight_state(p2, n, TightBound::Upper);
      worst = std::max({worst, std::abs(expectation(p2_op, up) - p2), std::abs(expectation(pn_op, up) - p2)});
      if (p2 < knee) continue;
      const double alpha = p2 * (n - 1) - (n - 2);
      const auto low = tight_state(std::clamp(alpha, 0.0, 1.0), n, TightBound::Lower);
      worst = std::max({worst, std::abs(expectation(p2_op, low) - p2),
                        std::abs(expectation(pn_op, low) - bound_b(p2, n))});
    }
  }
  return {worst < 1e-9, fmt::format("tight families hit both bounds for N = 3, 4, max error {:.2e}", worst)};
}

Outcome criterion_trace_distance() {
  std::mt19937_64 rng(2026);
  double excess = -1.0;
  double helstrom = 0.0;
  double dtr = 0.0;
  for (int n : {2, 3}) {
    const Space s(2, n);
    for (int t = 0; t < 30; ++t) {
      const auto rho = random_invariant_state(s, rng, t % 4 + 1);
      for (int k = 0; k < 10; ++k) {
        const auto r = tv_vs_bound(rho, random_povm(s.idim(), 2 + k % 4, rng));
        excess = std::max(excess, r.tv - r.bound);
      }
      const auto h = tv_vs_bound(rho, helstrom_measurement(rho));
      helstrom = std::max(helstrom, std::abs(h.tv - h.bound));
      const auto ind = indistinguishable_part(rho);
      dtr = std::max(dtr, std::abs(trace_distance(ind.state.op(), rho.op()) - (1.0 - ind.p_n)));
    }
  }
  return {excess <= 1e-9 && helstrom < 1e-8 && dtr < 1e-9,
          fmt::format("max TV - bound {:.2e}, Helstrom gap {:.2e}, trace distance error {:.2e}", excess, helstrom,
                      dtr)};
}

Outcome criterion_distinguishability() {
  std::mt19937_64 rng(7);
  bool certified = true;
  double round_trip = 0.0;
  bool tau_rejected = true;
  double weight = 0.0;
  for (int n : {2, 3}) {
    const auto base = classical_mixture(first_modes(n), n);
    certified = certified && is_perfectly_distinguishable(base).distinguishable;
    for (int t = 0; t < 3; ++t) {
      const auto rho = evolve(base, linalg::haar_unitary(n, rng));
      certified = certified && is_perfectly_distinguishable(rho).distinguishable;
      const auto cf = canonical_form(rho, static_cast<std::uint64_t>(t));
      const Matrix mapped = cf.unitary * rho.matrix() * cf.unitary.adjoint();
      round_trip = std::max({round_trip, (mapped - base.matrix()).norm(), (mapped - cf.target).norm()});
      const auto tau = mixture({{0.5, base}, {0.5, rho}});
      const auto cert = is_perfectly_distinguishable(tau);
      tau_rejected = tau_rejected && !cert.distinguishable;
      weight = std::max(weight, std::abs(cert.symmetric_weight - 1.0 / static_cast<double>(factorial(n))));
    }
  }
  return {certified && round_trip < 1e-7 && tau_rejected && weight < 1e-9,
          fmt::format("certified {}, canonical round trip {:.2e}, mixtures rejected {}, symmetric weight error {:.2e}",
                      certified ? "yes" : "no", round_trip, tau_rejected ? "yes" : "no", weight)};
}

Outcome criterion_counterexample() {
  const auto rho = counterexample_state();
  double worst = 0.0;
  for (const auto& p : permutations(3)) {
    if (!p.is_identity()) worst = std::max(worst, std::abs(trace_with(p, rho.space(), rho.matrix())));
  }
  const bool rejected = !is_perfectly_distinguishable(rho).distinguishable;
  return {worst < 1e-12 && rejected,
          fmt::format("6x6 state on orbit order 123,132,213,231,312,321: max |tr[rho pi]| {:.2e}, rejected {}", worst,
                      rejected ? "yes" : "no")};
}

Outcome criterion_schur_weyl() {
  std::mt19937_64 rng(11);
  double weights = 0.0;
  double reassembly = 0.0;
  double trivial = 0.0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 3; ++n) {
      const Matrix ps = leading_symmetrizer(m, n, n);
      for (int t = 0; t < 50; ++t) {
        const auto rho = random_invariant_state(Space(m, n), rng, t % 5 + 1);
        const auto blocks = schur_weyl_blocks(rho);
        double total = 0.0;
        for (const auto& b : blocks.blocks) total += b.weight;
        weights = std::max(weights, std::abs(total - 1.0));
        reassembly = std::max(reassembly, (blocks.reassemble() - rho.matrix()).norm());
        trivial = std::max(trivial, std::abs(blocks.weight(Partition::single_row(n)) - expectation(ps, rho)));
      }
    }
  }
  bool squares = true;
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t sum = 0;
    for (const auto& lam : partitions(n)) sum += hook_dimension(lam) * hook_dimension(lam);
    squares = squares && sum == factorial(n);
  }
  return {weights < 1e-10 && reassembly < 1e-8 && trivial < 1e-10 && squares,
          fmt::format("weight sum error {:.2e}, reassembly {:.2e}, p_(N) vs p_N {:.2e}, sum d^2 = N! {}", weights,
                      reassembly, trivial, squares ? "yes" : "no")};
}

Outcome criterion_interferometer() {
  std::mt19937_64 rng(13);
  double oracle = 0.0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (int t = 0; t < 20; ++t) {
        const Matrix u = linalg::haar_unitary(m, rng);
        for (const auto& in : occupations(m, n)) {
          const auto dist = outcome_distribution(dicke_state(in.assignment(), m), u);
          for (std::size_t k = 0; k < dist.outcomes.size(); ++k) {
            oracle = std::max(oracle, std::abs(dist.probabilities[k] - permanent_oracle(u, in, dist.outcomes[k])));
          }
        }
      }
    }
  }
  const double hom =
      outcome_distribution(dicke_state({1, 2}, 2), beamsplitter()).probability(make_occupation({1, 1}, 2));
  double completeness = 0.0;
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const Space s(m, n);
      Matrix sum = Matrix::Zero(s.idim(), s.idim());
      for (const auto& o : occupations(m, n)) sum += measurement_operator(o, n).matrix();
      completeness = std::max(completeness, (sum - Matrix::Identity(s.idim(), s.idim())).norm());
    }
  }
  return {oracle < 1e-9 && std::abs(hom) < 1e-12 && completeness < 1e-10,
          fmt::format("permanent oracle error {:.2e}, HOM coincidence {:.2e}, completeness {:.2e}", oracle,
                      std::abs(hom), completeness)};
}

Outcome criterion_tomography() {
  std::mt19937_64 rng(17);
  double recon = 0.0;
  bool dims = true;
  for (int n : {2, 3}) {
    const auto basis = random_observable_basis(2, n, 100 + static_cast<std::uint64_t>(n));
    dims = dims && basis.certificate.ok;
    const auto settings = measurement_settings(basis);
    for (int t = 0; t < 20; ++t) {
      const auto rho = random_invariant_state(Space(2, n), rng, t % 3 + 1);
      const auto r = reconstruct_state(simulate_records(rho, settings), 2, n);
      recon = std::max(recon, (r.state.matrix() - rho.matrix()).norm());
    }
  }
  // Dimension formula vs numerical rank of twirled matrix units.
  for (int n = 1; n <= 3; ++n) {
    const Space s(2, n);
    Matrix cols(static_cast<Eigen::Index>(s.dim() * s.dim()), static_cast<Eigen::Index>(s.dim() * s.dim()));
    Eigen::Index c = 0;
    for (int i = 0; i < s.idim(); ++i) {
      for (int j = 0; j < s.idim(); ++j) {
        Matrix e = Matrix::Zero(s.idim(), s.idim());
        e(i, j) = 1.0;
        cols.col(c++) = twirl(s, e).reshaped();
      }
    }
    Eigen::JacobiSVD<Matrix> svd(cols);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > 1e-9 * sv(0) ? 1 : 0;
    dims = dims && rank == static_cast<int>(invariant_dimension(2, n));
  }
  double p2 = 0.0;
  const Matrix p2_op = leading_symmetrizer(2, 3, 2);
  for (int t = 0; t < 20; ++t) {
    const auto rho = random_invariant_state(Space(2, 3), rng, t % 3 + 1);
    p2 = std::max(p2, std::abs(estimate_p2(rho).value - expectation(p2_op, rho)));
  }
  return {recon < 1e-6 && dims && p2 < 1e-8,
          fmt::format("reconstruction error {:.2e}, dimension matches rank {}, p2 estimate error {:.2e}", recon,
                      dims ? "yes" : "no", p2)};
}

Outcome criterion_purification() {
  std::mt19937_64 rng(19);
  double symmetry = 0.0;
  double reduction = 0.0;
  for (int n : {1, 2, 3}) {
    const Space s(2, n);
    const Space doubled(2, 2 * n);
    std::vector<Permutation> pairs;
    for (const auto& p : permutations(n)) {
      std::vector<int> images(static_cast<std::size_t>(2 * n));
      for (int i = 0; i < n; ++i) {
        images[static_cast<std::size_t>(i)] = p(i);
        images[static_cast<std::size_t>(n + i)] = n + p(i);
      }
      pairs.push_back(Permutation::from_images(images));
    }
    for (int t = 0; t < 50; ++t) {
      const auto rho = random_invariant_state(s, rng, t % 4 + 1);
      const auto pur = symmetric_purification(rho);
      for (const auto& pp : pairs) symmetry = std::max(symmetry, (apply(pp, doubled, pur.amplitudes) - pur.amplitudes).norm());
      // Partial trace over the second factor by explicit summation.
      Matrix reduced = Matrix::Zero(s.idim(), s.idim());
      for (int i = 0; i < s.idim(); ++i) {
        for (int k = 0; k < s.idim(); ++k) {
          for (int j = 0; j < s.idim(); ++j) {
            reduced(i, k) += pur.amplitudes(i * s.idim() + j) * std::conj(pur.amplitudes(k * s.idim() + j));
          }
        }
      }
      reduction = std::max(reduction, (reduced - rho.matrix()).norm());
    }
  }
  return {symmetry < 1e-9 && reduction < 1e-8,
          fmt::format("pair permutation defect {:.2e}, partial trace error {:.2e}", symmetry, reduction)};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      criterion_bounds,         criterion_tightness,   criterion_trace_distance,
      criterion_distinguishability, criterion_counterexample, criterion_schur_weyl,
      criterion_interferometer, criterion_tomography, criterion_purification};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %zu %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
