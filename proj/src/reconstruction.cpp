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

#include "besmub/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace besmub {

ComplexMatrix lmm_reconstruct(const MubCertificate &cert, const ProbabilityTable &table, double trace) {
  const std::uint32_t p = cert.p;
  if (!cert.verified_graph) throw std::invalid_argument("lmm_reconstruct: certificate is not verified");
  if (cert.members.size() != std::size_t{p} * p - 1) {
    throw std::invalid_argument("lmm_reconstruct: certificate must contain p^2 - 1 bases");
  }
  if (table.p != p || table.bases.size() != cert.members.size() || table.probs.size() != table.bases.size()) {
    throw std::invalid_argument("lmm_reconstruct: probability table does not match the certificate");
  }
  auto sorted_table = table.bases;
  auto sorted_cert = cert.members;
  std::sort(sorted_table.begin(), sorted_table.end());
  std::sort(sorted_cert.begin(), sorted_cert.end());
  if (sorted_table != sorted_cert) {
    throw std::invalid_argument("lmm_reconstruct: table bases differ from the certificate members");
  }

  const Eigen::Index dim = std::int64_t{p} * p;
  ComplexMatrix w = ComplexMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < table.bases.size(); ++k) {
    const auto &row = table.probs[k];
    if (row.size() != static_cast<std::size_t>(dim)) {
      throw std::invalid_argument("lmm_reconstruct: probability row has the wrong length");
    }
    double sum = 0.0;
    for (double v : row) sum += v;
    if (std::abs(sum - trace) > tolerance::kReconstruction) {
      throw std::invalid_argument("lmm_reconstruct: probabilities of basis " + std::to_string(k) + " sum to " +
                                  std::to_string(sum) + ", expected " + std::to_string(trace));
    }
    const ComplexMatrix basis = jam_basis(table.bases[k]);
    // sum_j probs_j |b_j><b_j| = B diag(probs) B^dagger
    Eigen::VectorXcd weights(dim);
    for (Eigen::Index j = 0; j < dim; ++j) weights(j) = row[j];
    w += basis * weights.asDiagonal() * basis.adjoint();
  }
  const double identity_weight = static_cast<double>(dim - 2) * trace / static_cast<double>(dim);
  w -= identity_weight * ComplexMatrix::Identity(dim, dim);
  return w;
}

}  // namespace besmub
