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

#include "besmub/clique.hpp"
#include "besmub/quantum_oracle.hpp"

namespace besmub {

/// Rebuilds a local maximally mixed operator from the outcome statistics of a
/// complete certificate (p^2 - 1 bases):
///
///   W = sum_{k,j} probs[k][j] Pi_j^k - (p^2 - 2) (trace / p^2) I.
///
/// Throws std::invalid_argument if the certificate is not graph-verified, is
/// not complete, does not match the table's bases, or if a row does not sum to
/// trace within 1e-8.
ComplexMatrix lmm_reconstruct(const MubCertificate &cert, const ProbabilityTable &table, double trace);

}  // namespace besmub
