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

#include "besmub/certificate_io.hpp"

#include <stdexcept>

namespace besmub {

using nlohmann::json;

namespace {

void require(bool cond, const std::string &what) {
  if (!cond) throw std::runtime_error("malformed JSON: " + what);
}

}  // namespace

json matrix_to_json(const Sl2Matrix &m) { return json::array({{m.alpha, m.beta}, {m.gamma, m.delta}}); }

Sl2Matrix matrix_from_json(const json &j, Prime p) {
  require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() &&
              j[1].size() == 2,
          "matrix must be [[a,b],[c,d]]");
  auto entry = [&](const json &v) {
    require(v.is_number_integer(), "matrix entries must be integers");
    return v.get<std::int64_t>();
  };
  return Sl2Matrix::make(p, entry(j[0][0]), entry(j[0][1]), entry(j[1][0]), entry(j[1][1]));
}

json certificate_to_json(const MubCertificate &cert) {
  json members = json::array();
  for (const auto &m : cert.members) members.push_back(matrix_to_json(m));
  return {{"p", cert.p},
          {"provenance", std::string(to_string(cert.provenance))},
          {"members", members},
          {"verified_graph", cert.verified_graph},
          {"verified_oracle", cert.verified_oracle}};
}

MubCertificate certificate_from_json(const json &j) {
  require(j.is_object(), "certificate must be an object");
  require(j.contains("p") && j["p"].is_number_unsigned(), "missing integer field 'p'");
  require(j.contains("members") && j["members"].is_array(), "missing array field 'members'");
  const Prime p(j["p"].get<std::uint32_t>());
  MubCertificate cert;
  cert.p = p;
  cert.provenance = j.contains("provenance") ? provenance_from_string(j["provenance"].get<std::string>())
                                             : Provenance::imported;
  for (const auto &m : j["members"]) cert.members.push_back(matrix_from_json(m, p));
  cert.verified_graph = j.value("verified_graph", false);
  cert.verified_oracle = j.value("verified_oracle", false);
  return cert;
}

json complex_matrix_to_json(const ComplexMatrix &m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix complex_matrix_from_json(const json &j) {
  require(j.is_array() && !j.empty(), "complex matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  const auto m = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix out(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    require(j[i].is_array() && static_cast<Eigen::Index>(j[i].size()) == m, "ragged complex matrix");
    for (Eigen::Index k = 0; k < m; ++k) {
      const json &z = j[i][k];
      require(z.is_array() && z.size() == 2, "complex entries must be [re, im]");
      out(i, k) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return out;
}

json probability_table_to_json(const ProbabilityTable &table, const std::optional<ComplexMatrix> &reference) {
  json bases = json::array();
  for (const auto &m : table.bases) bases.push_back(matrix_to_json(m));
  json out{{"p", table.p}, {"bases", bases}, {"probs", table.probs}};
  if (reference) out["reference"] = complex_matrix_to_json(*reference);
  return out;
}

ProbabilityTable probability_table_from_json(const json &j) {
  require(j.is_object(), "probability table must be an object");
  require(j.contains("p") && j["p"].is_number_unsigned(), "missing integer field 'p'");
  require(j.contains("bases") && j["bases"].is_array(), "missing array field 'bases'");
  require(j.contains("probs") && j["probs"].is_array(), "missing array field 'probs'");
  const Prime p(j["p"].get<std::uint32_t>());
  ProbabilityTable table;
  table.p = p;
  for (const auto &m : j["bases"]) table.bases.push_back(matrix_from_json(m, p));
  require(j["probs"].size() == table.bases.size(), "one probability row per basis is required");
  for (const auto &row : j["probs"]) {
    require(row.is_array() && row.size() == std::size_t{p} * p, "each probability row needs p^2 entries");
    table.probs.push_back(row.get<std::vector<double>>());
  }
  return table;
}

std::optional<ComplexMatrix> reference_operator_from_json(const json &j) {
  if (!j.contains("reference")) return std::nullopt;
  return complex_matrix_from_json(j["reference"]);
}

}  // namespace besmub
