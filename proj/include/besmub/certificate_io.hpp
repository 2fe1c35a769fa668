// Copyright 2026 The besmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>

#include "besmub/clique.hpp"
#include "besmub/quantum_oracle.hpp"
#include "json.hpp"

namespace besmub {

/// {"p", "provenance", "members": [[[a,b],[c,d]], ...], "verified_graph", "verified_oracle"}
nlohmann::json certificate_to_json(const MubCertificate &cert);
/// Throws std::runtime_error on schema violations and std::invalid_argument on
/// matrices without unit determinant.
MubCertificate certificate_from_json(const nlohmann::json &j);

nlohmann::json matrix_to_json(const Sl2Matrix &m);
Sl2Matrix matrix_from_json(const nlohmann::json &j, Prime p);

/// Complex matrices as nested [re, im] pairs, row major.
nlohmann::json complex_matrix_to_json(const ComplexMatrix &m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json &j);

/// {"p", "bases": [matrix...], "probs": [[...p^2 numbers...], ...]} with an
/// optional "reference" operator used to report reconstruction error.
nlohmann::json probability_table_to_json(const ProbabilityTable &table,
                                         const std::optional<ComplexMatrix> &reference = std::nullopt);
ProbabilityTable probability_table_from_json(const nlohmann::json &j);
std::optional<ComplexMatrix> reference_operator_from_json(const nlohmann::json &j);

}  // namespace besmub
