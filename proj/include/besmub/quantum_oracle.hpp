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

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "besmub/modp.hpp"

namespace besmub {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Residues2 = std::array<std::uint32_t, 2>;

namespace tolerance {
inline constexpr double kConstruction = 1e-10;
inline constexpr double kVerification = 1e-9;
inline constexpr double kReconstruction = 1e-8;
}  // namespace tolerance

/// Index pair (F, u) of the Clifford unitary C_(F|u) = D_u U_F.
struct CliffordElement {
  Sl2Matrix F;
  Residues2 u{0, 0};
};

/// omega^k with omega = exp(2 pi i / p); k is reduced mod p first.
Complex omega_power(std::int64_t k, std::uint32_t p);
/// tau^k with tau = exp((p+1) pi i / p); k is reduced mod 2p first.
Complex tau_power(std::int64_t k, std::uint32_t p);

ComplexMatrix shift_matrix(std::uint32_t p);  // X|j> = |j+1>
ComplexMatrix clock_matrix(std::uint32_t p);  // Z|j> = omega^j |j>

/// D_u = tau^(u1 u2) X^u1 Z^u2. Odd p only; p = 2 is served by the qubit table.
ComplexMatrix build_displacement(Prime p, Residues2 u);
/// U_F from the beta != 0 quadratic sum or the beta = 0 diagonal form.
ComplexMatrix build_symplectic_unitary(const Sl2Matrix &F);
ComplexMatrix build_clifford(const CliffordElement &c);

/// max |A - B| entrywise.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// True iff a = e^{i phi} b for some phi, within tol in max-norm.
bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol);
bool is_unitary(const ComplexMatrix &u, double tol = tolerance::kConstruction);

/// |Tr C_(F|u)| predicted by the Legendre-symbol case table.
double predicted_abs_trace(const CliffordElement &c);

struct TraceRelationMismatch {
  CliffordElement element;
  double computed = 0.0;
  double predicted = 0.0;
};

struct TraceRelationReport {
  std::size_t cases_checked = 0;
  std::vector<TraceRelationMismatch> mismatches;
  bool ok() const noexcept { return mismatches.empty(); }
};

/// Exhaustive over every (F, u) for the given odd p.
TraceRelationReport verify_trace_relations(Prime p, double tol = tolerance::kVerification);

/// (I (x) C) sum_j |jj> / sqrt(p); the first tensor factor is the slow index.
/// At p = 2 the state comes from the qubit stabilizer table instead.
StateVector jam_state(const CliffordElement &c);
/// All p^2 states of the basis attached to F, column u1 * p + u2.
ComplexMatrix jam_basis(const Sl2Matrix &F);

/// |<a|b>|. Throws std::invalid_argument on dimension mismatch.
double overlap(const StateVector &a, const StateVector &b);

/// Partial traces of a p^2 x p^2 operator on C^p (x) C^p.
ComplexMatrix partial_trace_first(const ComplexMatrix &w, std::uint32_t p);
ComplexMatrix partial_trace_second(const ComplexMatrix &w, std::uint32_t p);

/// Local maximally mixed test: both partial traces proportional to the identity.
/// Throws std::invalid_argument if w is not Hermitean within 1e-10.
bool lmm_check(const ComplexMatrix &w, double tol = tolerance::kVerification);

/// Removes the single-site components of a Hermitean operator while keeping its
/// trace, giving the nearest LMM operator in Hilbert-Schmidt norm.
ComplexMatrix project_to_lmm(const ComplexMatrix &h, std::uint32_t p);

/// Per-basis outcome probabilities Tr(W Pi_j^k). Row k follows the basis order,
/// column j the state index u1 * p + u2 within that basis.
struct ProbabilityTable {
  std::uint32_t p = 0;
  std::vector<Sl2Matrix> bases;
  std::vector<std::vector<double>> probs;
};

ProbabilityTable simulate_probabilities(const std::vector<Sl2Matrix> &bases, const ComplexMatrix &w);

}  // namespace besmub
