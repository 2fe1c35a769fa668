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

#include "besmub/quantum_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "besmub/qubit_table.hpp"

namespace besmub {

namespace {

void require_odd(std::uint32_t p, const char *what) {
  if (p == 2) throw std::domain_error(std::string(what) + ": p = 2 is served by the qubit table");
}

}  // namespace

Complex omega_power(std::int64_t k, std::uint32_t p) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce(k, p)) / p;
  return std::polar(1.0, angle);
}

Complex tau_power(std::int64_t k, std::uint32_t p) {
  // tau = exp((p+1) pi i / p) has order dividing 2p.
  const std::uint64_t e = reduce(k, 2 * p) * std::uint64_t{p + 1} % (2 * std::uint64_t{p});
  return std::polar(1.0, std::numbers::pi * static_cast<double>(e) / p);
}

ComplexMatrix shift_matrix(std::uint32_t p) {
  ComplexMatrix x = ComplexMatrix::Zero(p, p);
  for (std::uint32_t j = 0; j < p; ++j) x((j + 1) % p, j) = 1.0;
  return x;
}

ComplexMatrix clock_matrix(std::uint32_t p) {
  ComplexMatrix z = ComplexMatrix::Zero(p, p);
  for (std::uint32_t j = 0; j < p; ++j) z(j, j) = omega_power(j, p);
  return z;
}

ComplexMatrix build_displacement(Prime p, Residues2 u) {
  require_odd(p, "build_displacement");
  const std::uint32_t q = p.value();
  const std::uint32_t u1 = u[0] % q, u2 = u[1] % q;
  // X^u1 Z^u2 |j> = omega^(u2 j) |j + u1>
  ComplexMatrix d = ComplexMatrix::Zero(q, q);
  const Complex phase = tau_power(static_cast<std::int64_t>(u1) * u2, q);
  for (std::uint32_t j = 0; j < q; ++j) d((j + u1) % q, j) = phase * omega_power(static_cast<std::int64_t>(u2) * j, q);
  return d;
}

ComplexMatrix build_symplectic_unitary(const Sl2Matrix &F) {
  require_odd(F.p, "build_symplectic_unitary");
  const std::uint32_t p = F.p;
  const std::int64_t a = F.alpha, b = F.beta, c = F.gamma, d = F.delta;
  ComplexMatrix u = ComplexMatrix::Zero(p, p);
  if (b != 0) {
    const std::int64_t b_inv = inv_mod(F.beta, p);
    const double norm = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::int64_t j = 0; j < p; ++j) {
      for (std::int64_t k = 0; k < p; ++k) {
        const std::int64_t quad = reduce(a * k * k - 2 * j * k + d * j * j, 2 * p);
        u(j, k) = norm * tau_power(b_inv * quad, p);
      }
    }
  } else {
    for (std::int64_t k = 0; k < p; ++k) u(reduce(a * k, p), k) = tau_power(a * c * k * k, p);
  }
  return u;
}

ComplexMatrix build_clifford(const CliffordElement &c) {
  return build_displacement(Prime(c.F.p), c.u) * build_symplectic_unitary(c.F);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // Align on the largest entry of b, then compare.
  Eigen::Index r = 0, col = 0;
  b.cwiseAbs().maxCoeff(&r, &col);
  const Complex pivot_b = b(r, col);
  const Complex pivot_a = a(r, col);
  if (std::abs(pivot_b) < tol) return a.cwiseAbs().maxCoeff() < tol;
  if (std::abs(pivot_a) < tol) return false;
  const Complex phase = (pivot_a / pivot_b) / std::abs(pivot_a / pivot_b);
  return max_abs_diff(a, phase * b) <= tol;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(u.rows(), u.cols())) <= tol;
}

double predicted_abs_trace(const CliffordElement &c) {
  const Sl2Matrix &F = c.F;
  const std::uint32_t p = F.p;
  const Prime prime(p);
  const std::uint32_t u1 = c.u[0] % p, u2 = c.u[1] % p;
  const double root_p = std::sqrt(static_cast<double>(p));
  if (F.trace() != 2 % p) return 1.0;
  if (F.beta == 0) {
    if (F.gamma != 0) return std::abs(legendre(F.gamma, prime)) * root_p * (u1 == 0 ? 1.0 : 0.0);
    return (u1 == 0 && u2 == 0) ? static_cast<double>(p) : 0.0;
  }
  const std::uint32_t line = static_cast<std::uint32_t>(
      std::uint64_t{inv_mod(F.beta, p)} * reduce(1 - static_cast<std::int64_t>(F.alpha), p) % p * u1 % p);
  const std::uint32_t minus_beta = reduce(-static_cast<std::int64_t>(F.beta), p);
  return std::abs(legendre(minus_beta, prime)) * root_p * (u2 == line ? 1.0 : 0.0);
}

TraceRelationReport verify_trace_relations(Prime p, double tol) {
  require_odd(p, "verify_trace_relations");
  TraceRelationReport report;
  for (const auto &F : enumerate_sl2(p)) {
    const ComplexMatrix uf = build_symplectic_unitary(F);
    for (std::uint32_t u1 = 0; u1 < p; ++u1) {
      for (std::uint32_t u2 = 0; u2 < p; ++u2) {
        const CliffordElement c{F, {u1, u2}};
        const double computed = std::abs((build_displacement(p, c.u) * uf).trace());
        const double predicted = predicted_abs_trace(c);
        ++report.cases_checked;
        if (std::abs(computed - predicted) > tol) report.mismatches.push_back({c, computed, predicted});
      }
    }
  }
  return report;
}

StateVector jam_state(const CliffordElement &c) {
  const std::uint32_t p = c.F.p;
  if (p == 2) return qubit_basis(c.F).col((c.u[0] % 2) * 2 + c.u[1] % 2);
  const ComplexMatrix cl = build_clifford(c);
  StateVector out(p * p);
  const double norm = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::uint32_t j = 0; j < p; ++j) {
    for (std::uint32_t k = 0; k < p; ++k) out(j * p + k) = cl(k, j) * norm;
  }
  return out;
}

ComplexMatrix jam_basis(const Sl2Matrix &F) {
  const std::uint32_t p = F.p;
  if (p == 2) return qubit_basis(F);
  const Prime prime(p);
  const ComplexMatrix uf = build_symplectic_unitary(F);
  const double norm = 1.0 / std::sqrt(static_cast<double>(p));
  ComplexMatrix basis(p * p, p * p);
  for (std::uint32_t u1 = 0; u1 < p; ++u1) {
    for (std::uint32_t u2 = 0; u2 < p; ++u2) {
      const ComplexMatrix cl = build_displacement(prime, {u1, u2}) * uf;
      const Eigen::Index col = u1 * p + u2;
      for (std::uint32_t j = 0; j < p; ++j) {
        for (std::uint32_t k = 0; k < p; ++k) basis(j * p + k, col) = cl(k, j) * norm;
      }
    }
  }
  return basis;
}

double overlap(const StateVector &a, const StateVector &b) {
  if (a.size() != b.size()) throw std::invalid_argument("overlap: dimension mismatch");
  return std::abs(a.dot(b));
}

ComplexMatrix partial_trace_first(const ComplexMatrix &w, std::uint32_t p) {
  ComplexMatrix out = ComplexMatrix::Zero(p, p);
  for (std::uint32_t i = 0; i < p; ++i) out += w.block(i * p, i * p, p, p);
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix &w, std::uint32_t p) {
  ComplexMatrix out(p, p);
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) out(i, j) = w.block(i * p, j * p, p, p).trace();
  }
  return out;
}

namespace {

bool proportional_to_identity(const ComplexMatrix &m, double tol) {
  const Complex mean = m.trace() / static_cast<double>(m.rows());
  return max_abs_diff(m, mean * ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

std::uint32_t local_dimension(const ComplexMatrix &w) {
  const auto d = static_cast<std::uint32_t>(std::llround(std::sqrt(static_cast<double>(w.rows()))));
  if (w.rows() != w.cols() || std::uint64_t{d} * d != static_cast<std::uint64_t>(w.rows())) {
    throw std::invalid_argument("operator is not square of dimension p^2");
  }
  return d;
}

}  // namespace

bool lmm_check(const ComplexMatrix &w, double tol) {
  const std::uint32_t p = local_dimension(w);
  if (max_abs_diff(w, w.adjoint()) > tolerance::kConstruction) {
    throw std::invalid_argument("lmm_check: operator is not Hermitean");
  }
  return proportional_to_identity(partial_trace_first(w, p), tol) &&
         proportional_to_identity(partial_trace_second(w, p), tol);
}

ComplexMatrix project_to_lmm(const ComplexMatrix &h, std::uint32_t p) {
  const ComplexMatrix id = ComplexMatrix::Identity(p, p);
  const Complex t = h.trace();
  const ComplexMatrix rho_a = partial_trace_second(h, p) - t / static_cast<double>(p) * id;
  const ComplexMatrix rho_b = partial_trace_first(h, p) - t / static_cast<double>(p) * id;
  ComplexMatrix w = h;
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) {
      w.block(i * p, j * p, p, p) -= rho_a(i, j) / static_cast<double>(p) * id;
      if (i == j) w.block(i * p, i * p, p, p) -= rho_b / static_cast<double>(p);
    }
  }
  return w;
}

ProbabilityTable simulate_probabilities(const std::vector<Sl2Matrix> &bases, const ComplexMatrix &w) {
  ProbabilityTable table;
  if (bases.empty()) return table;
  table.p = bases.front().p;
  table.bases = bases;
  for (const auto &F : bases) {
    const ComplexMatrix basis = jam_basis(F);
    std::vector<double> row(basis.cols());
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      row[j] = std::real(basis.col(j).dot(w * basis.col(j)));
    }
    table.probs.push_back(std::move(row));
  }
  return table;
}

}  // namespace besmub
