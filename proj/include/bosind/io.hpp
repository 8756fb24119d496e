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

// File formats. Matrices are row-major nested arrays split into "re" and
// "im"; states carry "M" and "N" and use the lexicographic basis of Space.
//
//   state        {"M": 2, "N": 2, "re": [[...]], "im": [[...]]}
//   unitary      {"re": [[...]], "im": [[...]]}
//   distribution {"M": 2, "N": 2, "outcomes": [[2,0], ...], "probabilities": [...]}
//   records      [{"unitary": unitary, "distribution": distribution}, ...]
//   purification {"M": 2, "N": 2, "dim": 4, "re": [...], "im": [...]}, index i*dim + j
//
// Parse errors name the offending field.

#include <string>
#include <vector>

#include <json.hpp>

#include "bosind/disting.hpp"
#include "bosind/interferometer.hpp"
#include "bosind/measures.hpp"
#include "bosind/operator.hpp"
#include "bosind/states.hpp"
#include "bosind/tomography.hpp"

namespace bosind::io {

using nlohmann::json;

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& where);

json state_to_json(const DenseOperator& op);
DenseOperator operator_from_json(const json& j);
InvariantState state_from_json(const json& j, double tol = InvariantState::kDefaultTolerance);

json unitary_to_json(const Matrix& u);
Matrix unitary_from_json(const json& j);

json distribution_to_json(const OutcomeDistribution& d);
OutcomeDistribution distribution_from_json(const json& j);
// Columns m_1..m_M, probability.
std::string distribution_csv(const OutcomeDistribution& d);

json records_to_json(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> records_from_json(const json& j);

json certificate_to_json(const Certificate& c);
json reconstruction_to_json(const Reconstruction& r);
json purification_to_json(const Purification& p);

// Columns N, p2, lower_closed, upper_closed, lower_lp, upper_lp.
std::string bounds_csv(const std::vector<BoundResult>& rows);

// Canonical text form: two-space indent and a trailing newline.
std::string dump(const json& j);

}  // namespace bosind::io
