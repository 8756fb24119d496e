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

// bosind command line. Structured results go to --out (or stdout); errors
// go to stderr as {"error": kind, "message": text} with a nonzero exit.

#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bosind/disting.hpp"
#include "bosind/errors.hpp"
#include "bosind/interferometer.hpp"
#include "bosind/io.hpp"
#include "bosind/measures.hpp"
#include "bosind/states.hpp"
#include "bosind/tensor_rep.hpp"
#include "bosind/tomography.hpp"

namespace {

using bosind::io::json;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::optional<int> modes;
  std::optional<int> particles;
  std::optional<std::uint64_t> seed;
  double tol = bosind::InvariantState::kDefaultTolerance;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    bosind::io::write_text_file(opt.out, text);
  }
}

bosind::InvariantState load_state(const std::string& path, const Options& opt) {
  auto rho = bosind::io::state_from_json(bosind::io::read_json_file(path), opt.tol);
  if (opt.modes && *opt.modes != rho.space().modes()) {
    throw bosind::Error(bosind::ErrorKind::Shape, "--M does not match the state file");
  }
  if (opt.particles && *opt.particles != rho.space().particles()) {
    throw bosind::Error(bosind::ErrorKind::Shape, "--N does not match the state file");
  }
  return rho;
}

void cmd_bounds_table(const Options& opt, const std::vector<int>& n_list, std::vector<double> grid, int points) {
  std::vector<int> ns = n_list;
  if (ns.empty() && opt.particles) ns.push_back(*opt.particles);
  if (ns.empty()) throw UsageError("bounds-table needs --N");
  for (int n : ns) {
    if (n < 2) throw UsageError("bounds-table needs N >= 2");
  }
  if (grid.empty()) {
    if (points < 2) throw UsageError("--points must be at least 2");
    for (int i = 0; i < points; ++i) grid.push_back(static_cast<double>(i) / (points - 1));
  }
  for (double p : grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p2 grid values must lie in [0,1]");
  }
  emit(opt, bosind::io::bounds_csv(bosind::bounds_table(ns, grid)));
}

void cmd_measure(const Options& opt, const std::string& path) {
  const auto rho = load_state(path, opt);
  const int n = rho.space().particles();
  json report{{"M", rho.space().modes()}, {"N", n}};
  json pk = json::object();
  for (int k = 2; k <= n; ++k) pk[std::to_string(k)] = bosind::p_k(rho, k);
  report["p_k"] = pk;
  json weights = json::array();
  for (const auto& block : bosind::schur_weyl_blocks(rho).blocks) {
    weights.push_back(json{{"shape", block.shape.parts()}, {"weight", block.weight}});
  }
  report["schur_weights"] = weights;
  if (n >= 2) {
    try {
      const auto ind = bosind::indistinguishable_part(rho);
      report["trace_distance_check"] = json{{"p_N", ind.p_n},
                                            {"trace_distance", bosind::trace_distance(ind.state.op(), rho.op())},
                                            {"one_minus_p_N", 1.0 - ind.p_n}};
    } catch (const bosind::Error& e) {
      if (e.kind() != bosind::ErrorKind::NoSymmetricSupport) throw;
      report["trace_distance_check"] = nullptr;
    }
  }
  emit(opt, bosind::io::dump(report));
}

void cmd_certify(const Options& opt, const std::string& path) {
  const auto rho = load_state(path, opt);
  emit(opt, bosind::io::dump(bosind::io::certificate_to_json(bosind::is_perfectly_distinguishable(rho, 1e-8))));
}

void cmd_simulate(const Options& opt, const std::string& state_path, const std::string& unitary_path) {
  const auto rho = load_state(state_path, opt);
  const auto u = bosind::io::unitary_from_json(bosind::io::read_json_file(unitary_path));
  emit(opt, bosind::io::distribution_csv(bosind::outcome_distribution(rho, u)));
}

void cmd_tomography(const Options& opt, const std::string& records_path, const std::string& generate_from,
                    const std::string& report_path) {
  if (!generate_from.empty()) {
    if (!opt.seed) throw UsageError("tomography --generate needs --seed");
    const auto rho = load_state(generate_from, opt);
    const auto basis =
        bosind::random_observable_basis(rho.space().modes(), rho.space().particles(), *opt.seed);
    const auto records = bosind::simulate_records(rho, bosind::measurement_settings(basis));
    emit(opt, bosind::io::dump(bosind::io::records_to_json(records)));
    return;
  }
  if (records_path.empty()) throw UsageError("tomography needs a records file or --generate");
  const auto records = bosind::io::records_from_json(bosind::io::read_json_file(records_path));
  if (records.empty()) throw bosind::Error(bosind::ErrorKind::Underdetermined, "records file is empty");
  const int m = records.front().distribution.modes;
  const int n = records.front().distribution.particles;
  if ((opt.modes && *opt.modes != m) || (opt.particles && *opt.particles != n)) {
    throw bosind::Error(bosind::ErrorKind::Shape, "--M/--N do not match the records");
  }
  const auto result = bosind::reconstruct_state(records, m, n);
  if (!report_path.empty()) {
    bosind::io::write_text_file(report_path, bosind::io::dump(bosind::io::reconstruction_to_json(result)));
  }
  emit(opt, bosind::io::dump(bosind::io::state_to_json(result.state.op())));
}

void cmd_purify(const Options& opt, const std::string& path) {
  const auto rho = load_state(path, opt);
  emit(opt, bosind::io::dump(bosind::io::purification_to_json(bosind::symmetric_purification(rho))));
}

// Oracle equivalence: first-quantisation distributions of Dicke inputs
// against the permanent formula, for random interferometers.
int cmd_selftest(const Options& opt, int unitaries) {
  if (!opt.seed) throw UsageError("selftest needs --seed");
  const int max_m = opt.modes.value_or(3);
  const int max_n = opt.particles.value_or(3);
  if (max_m < 1 || max_n < 1 || max_n > 5) throw UsageError("selftest needs 1 <= M and 1 <= N <= 5");
  std::mt19937_64 rng(*opt.seed);
  double worst = 0.0;
  int cases = 0;
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      for (int t = 0; t < unitaries; ++t) {
        const bosind::Matrix u = bosind::linalg::haar_unitary(m, rng);
        for (const auto& in : bosind::occupations(m, n)) {
          const auto dist = bosind::outcome_distribution(bosind::dicke_state(in.assignment(), m), u);
          for (std::size_t i = 0; i < dist.outcomes.size(); ++i) {
            const double oracle = bosind::permanent_oracle(u, in, dist.outcomes[i]);
            worst = std::max(worst, std::abs(oracle - dist.probabilities[i]));
          }
          ++cases;
        }
      }
    }
  }
  const bool pass = worst < 1e-9;
  emit(opt, bosind::io::dump(json{{"check", "permanent_oracle_equivalence"},
                                  {"cases", cases},
                                  {"max_abs_error", worst},
                                  {"tolerance", 1e-9},
                                  {"pass", pass}}));
  return pass ? 0 : kExitError;
}

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indistinguishability tools for permutation invariant N-particle states"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--M", opt.modes, "Number of modes (checked against inputs)");
  app.add_option("--N", opt.particles, "Number of particles (checked against inputs)");
  app.add_option("--seed", opt.seed, "Seed for commands that draw random numbers");
  app.add_option("--tol", opt.tol, "Certification tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out, "Output file (default stdout)");

  std::vector<int> n_list;
  std::vector<double> grid;
  int points = 101;
  auto* bounds = app.add_subcommand("bounds-table", "Closed-form and LP bounds on p_N as CSV");
  bounds->add_option("--N", n_list, "Particle numbers, comma separated")->delimiter(',');
  bounds->add_option("--p2", grid, "Explicit p2 grid")->delimiter(',');
  bounds->add_option("--points", points, "Uniform grid size on [0,1] when --p2 is absent");

  std::string state_path;
  auto* measure = app.add_subcommand("measure", "p_k, Schur-Weyl weights and the trace-distance check");
  measure->add_option("state", state_path, "State JSON")->required();

  std::string certify_path;
  auto* certify = app.add_subcommand("certify", "Perfect distinguishability certificate");
  certify->add_option("state", certify_path, "State JSON")->required();

  std::string sim_state;
  std::string sim_unitary;
  auto* simulate = app.add_subcommand("simulate", "Occupation distribution after an interferometer");
  simulate->add_option("state", sim_state, "State JSON")->required();
  simulate->add_option("unitary", sim_unitary, "Unitary JSON")->required();

  std::string records_path;
  std::string generate_from;
  std::string report_path;
  auto* tomo = app.add_subcommand("tomography", "Reconstruct a state from records, or generate records");
  tomo->add_option("records", records_path, "Records JSON");
  tomo->add_option("--generate", generate_from, "State JSON to simulate certified settings for");
  tomo->add_option("--report", report_path, "Write the reconstruction report here");

  std::string purify_path;
  auto* purify = app.add_subcommand("purify", "Symmetric purification vector");
  purify->add_option("state", purify_path, "State JSON")->required();

  int unitaries = 20;
  auto* selftest = app.add_subcommand("selftest", "Permanent oracle equivalence suite");
  selftest->add_option("--unitaries", unitaries, "Random interferometers per (M, N)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kExitUsage;
  }

  try {
    if (*bounds) cmd_bounds_table(opt, n_list, grid, points);
    if (*measure) cmd_measure(opt, state_path);
    if (*certify) cmd_certify(opt, certify_path);
    if (*simulate) cmd_simulate(opt, sim_state, sim_unitary);
    if (*tomo) cmd_tomography(opt, records_path, generate_from, report_path);
    if (*purify) cmd_purify(opt, purify_path);
    if (*selftest) return cmd_selftest(opt, unitaries);
  } catch (const UsageError& e) {
    print_error("usage", e.what());
    return kExitUsage;
  } catch (const bosind::Error& e) {
    print_error(std::string(bosind::to_string(e.kind())), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kExitError;
  }
  return 0;
}
