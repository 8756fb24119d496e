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

#include "bosind/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "bosind/errors.hpp"

namespace bosind::io {

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorKind::Parse, message); }

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) parse_error(where + ": expected an object");
  const auto it = j.find(name);
  if (it == j.end()) parse_error(where + ": missing field \"" + name + "\"");
  return *it;
}

int int_field(const json& j, const char* name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_number_integer()) parse_error(where + ": field \"" + name + "\" must be an integer");
  return v.get<int>();
}

RealMatrix real_rows(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) parse_error(where + ": expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  RealMatrix out;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array()) parse_error(where + ": row " + std::to_string(r) + " is not an array");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      out.resize(rows, cols);
    }
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      parse_error(where + ": row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                  " entries, expected " + std::to_string(cols));
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) {
        parse_error(where + ": entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not a number");
      }
      out(r, c) = v.get<double>();
    }
  }
  return out;
}

json real_rows_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Validation, "cannot write " + path);
  out << text;
}

json matrix_to_json(const Matrix& m) {
  return json{{"re", real_rows_to_json(m.real())}, {"im", real_rows_to_json(m.imag())}};
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  const RealMatrix re = real_rows(field(j, "re", where), where + ".re");
  const RealMatrix im = real_rows(field(j, "im", where), where + ".im");
  if (re.rows() != im.rows() || re.cols() != im.cols()) parse_error(where + ": re and im differ in shape");
  Matrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

json state_to_json(const DenseOperator& op) {
  json j = matrix_to_json(op.matrix());
  return json{{"M", op.space().modes()}, {"N", op.space().particles()}, {"re", j["re"]}, {"im", j["im"]}};
}

DenseOperator operator_from_json(const json& j) {
  const int m = int_field(j, "M", "state");
  const int n = int_field(j, "N", "state");
  const Space space(m, n);
  Matrix mat = matrix_from_json(j, "state");
  if (mat.rows() != space.idim() || mat.cols() != space.idim()) {
    throw Error(ErrorKind::Shape, "state: matrix is " + std::to_string(mat.rows()) + "x" +
                                      std::to_string(mat.cols()) + " but M^N = " + std::to_string(space.dim()));
  }
  return DenseOperator(space, std::move(mat));
}

InvariantState state_from_json(const json& j, double tol) { return InvariantState::certify(operator_from_json(j), tol); }

json unitary_to_json(const Matrix& u) { return matrix_to_json(u); }

Matrix unitary_from_json(const json& j) {
  Matrix u = matrix_from_json(j, "unitary");
  if (u.rows() != u.cols()) parse_error("unitary: matrix is not square");
  return u;
}

json distribution_to_json(const OutcomeDistribution& d) {
  json outcomes = json::array();
  for (const auto& m : d.outcomes) outcomes.push_back(m.counts);
  return json{{"M", d.modes}, {"N", d.particles}, {"outcomes", outcomes}, {"probabilities", d.probabilities}};
}

OutcomeDistribution distribution_from_json(const json& j) {
  OutcomeDistribution d;
  d.modes = int_field(j, "M", "distribution");
  d.particles = int_field(j, "N", "distribution");
  const json& outcomes = field(j, "outcomes", "distribution");
  const json& probs = field(j, "probabilities", "distribution");
  if (!outcomes.is_array() || !probs.is_array() || outcomes.size() != probs.size()) {
    parse_error("distribution: outcomes and probabilities must be arrays of equal length");
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].is_array() || !probs[i].is_number()) {
      parse_error("distribution: entry " + std::to_string(i) + " is malformed");
    }
    std::vector<int> counts;
    for (const auto& c : outcomes[i]) {
      if (!c.is_number_integer()) parse_error("distribution: outcome " + std::to_string(i) + " has a non-integer count");
      counts.push_back(c.get<int>());
    }
    if (static_cast<int>(counts.size()) != d.modes) {
      parse_error("distribution: outcome " + std::to_string(i) + " does not have M entries");
    }
    d.outcomes.push_back(make_occupation(std::move(counts), d.particles));
    d.probabilities.push_back(probs[i].get<double>());
  }
  // Reorder to the canonical enumeration; every occupation must appear once.
  const auto all = occupations(d.modes, d.particles);
  if (all.size() != d.outcomes.size()) parse_error("distribution: expected one entry per occupation");
  OutcomeDistribution sorted{d.modes, d.particles, all, std::vector<double>(all.size(), 0.0)};
  std::vector<bool> seen(all.size(), false);
  for (std::size_t i = 0; i < d.outcomes.size(); ++i) {
    const auto it = std::find(all.begin(), all.end(), d.outcomes[i]);
    const auto pos = static_cast<std::size_t>(it - all.begin());
    if (seen[pos]) parse_error("distribution: repeated outcome");
    seen[pos] = true;
    sorted.probabilities[pos] = d.probabilities[i];
  }
  return sorted;
}

std::string distribution_csv(const OutcomeDistribution& d) {
  std::string out;
  for (int j = 1; j <= d.modes; ++j) out += fmt::format("m_{},", j);
  out += "probability\n";
  for (std::size_t i = 0; i < d.outcomes.size(); ++i) {
    for (int c : d.outcomes[i].counts) out += fmt::format("{},", c);
    out += fmt::format("{}\n", d.probabilities[i]);
  }
  return out;
}

json records_to_json(const std::vector<ExperimentRecord>& records) {
  json out = json::array();
  for (const auto& r : records) {
    out.push_back(json{{"unitary", unitary_to_json(r.unitary)}, {"distribution", distribution_to_json(r.distribution)}});
  }
  return out;
}

std::vector<ExperimentRecord> records_from_json(const json& j) {
  if (!j.is_array()) parse_error("records: expected an array");
  std::vector<ExperimentRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "records[" + std::to_string(i) + "]";
    Matrix u = matrix_from_json(field(j[i], "unitary", where), where + ".unitary");
    out.push_back({std::move(u), distribution_from_json(field(j[i], "distribution", where))});
  }
  return out;
}

json certificate_to_json(const Certificate& c) {
  json assignments = json::array();
  for (const auto& per_space : c.assignments) assignments.push_back(per_space);
  json out{{"verdict", c.distinguishable},
           {"multiplicities", c.multiplicities},
           {"witness_cycle_type", c.witness_cycle_type ? json(c.witness_cycle_type->parts()) : json(nullptr)},
           {"assignments", assignments},
           {"symmetric_weight", c.symmetric_weight},
           {"degeneracy_warning", c.degeneracy_warning}};
  if (c.degeneracy_warning) out["warning"] = c.warning;
  return out;
}

json reconstruction_to_json(const Reconstruction& r) {
  return json{{"state", state_to_json(r.state.op())},
              {"rank", r.rank},
              {"residual", r.residual},
              {"min_singular", r.min_singular},
              {"max_singular", r.max_singular},
              {"clipped", r.clipped}};
}

json purification_to_json(const Purification& p) {
  std::vector<double> re;
  std::vector<double> im;
  for (Eigen::Index i = 0; i < p.amplitudes.size(); ++i) {
    re.push_back(p.amplitudes(i).real());
    im.push_back(p.amplitudes(i).imag());
  }
  return json{{"M", p.space.modes()}, {"N", p.space.particles()}, {"dim", p.space.idim()}, {"re", re}, {"im", im}};
}

std::string bounds_csv(const std::vector<BoundResult>& rows) {
  std::string out = "N,p2,lower_closed,upper_closed,lower_lp,upper_lp\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{}\n", r.n, r.p2, r.lower, r.upper, r.lp_lower, r.lp_upper);
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace bosind::io
