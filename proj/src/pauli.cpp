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

#include "besmub/pauli.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace besmub {

std::string to_string(const SymplecticPauli &op) {
  std::ostringstream out;
  out << "(" << op.x[0] << "," << op.x[1] << "|" << op.z[0] << "," << op.z[1] << ")";
  return out.str();
}

namespace {

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

ComplexMatrix power(const ComplexMatrix &m, std::uint32_t e) {
  ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
  for (std::uint32_t i = 0; i < e; ++i) out = out * m;
  return out;
}

SymplecticPauli combine(const SymplecticPauli &g, const SymplecticPauli &h, std::uint32_t a, std::uint32_t b,
                        std::uint32_t p) {
  SymplecticPauli out;
  for (int i = 0; i < 2; ++i) {
    out.x[i] = static_cast<std::uint32_t>((std::uint64_t{a} * g.x[i] + std::uint64_t{b} * h.x[i]) % p);
    out.z[i] = static_cast<std::uint32_t>((std::uint64_t{a} * g.z[i] + std::uint64_t{b} * h.z[i]) % p);
  }
  return out;
}

}  // namespace

ComplexMatrix pauli_matrix(Prime p, const SymplecticPauli &op) {
  const std::uint32_t q = p.value();
  const ComplexMatrix x = shift_matrix(q);
  const ComplexMatrix z = clock_matrix(q);
  const ComplexMatrix xs = kron(power(x, op.x[0] % q), power(x, op.x[1] % q));
  const ComplexMatrix zs = kron(power(z, op.z[0] % q), power(z, op.z[1] % q));
  return omega_power(-static_cast<std::int64_t>(op.phase), q) * (xs * zs);
}

ComplexMatrix projector(Prime p, const SymplecticPauli &op, std::uint32_t k) {
  if (op.is_identity()) throw std::invalid_argument("projector: identity operator has a single eigenspace");
  const std::uint32_t q = p.value();
  SymplecticPauli bare = op;
  bare.phase = 0;
  const ComplexMatrix pm = pauli_matrix(p, bare);
  ComplexMatrix acc = ComplexMatrix::Zero(q * q, q * q);
  ComplexMatrix term = ComplexMatrix::Identity(q * q, q * q);
  for (std::uint32_t m = 0; m < q; ++m) {
    acc += omega_power(-static_cast<std::int64_t>(m) * k, q) * term;
    term = term * pm;
  }
  return acc / static_cast<double>(q);
}

bool symplectic_commute(const SymplecticPauli &a, const SymplecticPauli &b, Prime p) {
  const std::uint64_t q = p.value();
  std::uint64_t pos = 0, neg = 0;
  for (int i = 0; i < 2; ++i) {
    pos += std::uint64_t{a.x[i]} * b.z[i];
    neg += std::uint64_t{b.x[i]} * a.z[i];
  }
  return (pos % q) == (neg % q);
}

StabilizerClass class_for(const Sl2Matrix &F) {
  const std::uint32_t p = F.p;
  auto r = [p](std::int64_t v) { return reduce(v, p); };
  StabilizerClass c{F, {}, {}};
  if (F.beta != 0) {
    const std::int64_t b_inv = inv_mod(F.beta, p);
    c.generator = {{1, 0}, {r(std::int64_t{F.alpha} * b_inv), r(-b_inv)}, 0};
    c.generator_prime = {{0, 1}, {r(-b_inv), r(b_inv * F.delta)}, 0};
  } else {
    c.generator = {{1, F.alpha}, {0, F.gamma}, 0};
    c.generator_prime = {{0, 0}, {1, r(-static_cast<std::int64_t>(F.delta))}, 0};
  }
  return c;
}

std::vector<SymplecticPauli> class_members(const StabilizerClass &c) {
  const std::uint32_t p = c.F.p;
  std::vector<SymplecticPauli> out;
  out.reserve(std::size_t{p} * p - 1);
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      out.push_back(combine(c.generator, c.generator_prime, a, b, p));
    }
  }
  return out;
}

EigenbasisReport verify_eigenbasis(const Sl2Matrix &F) {
  const std::uint32_t p = F.p;
  if (p == 2) throw std::domain_error("verify_eigenbasis requires odd p");
  const Prime prime(p);
  const StabilizerClass cls = class_for(F);
  const ComplexMatrix basis = jam_basis(F);

  std::vector<ComplexMatrix> first, second;
  for (std::uint32_t k = 0; k < p; ++k) {
    first.push_back(projector(prime, cls.generator, k));
    second.push_back(projector(prime, cls.generator_prime, k));
  }

  EigenbasisReport report;
  report.state_for_outcome.assign(std::size_t{p} * p, -1);
  std::vector<bool> used(std::size_t{p} * p, false);
  bool injective = true;
  for (std::uint32_t k1 = 0; k1 < p; ++k1) {
    for (std::uint32_t k2 = 0; k2 < p; ++k2) {
      const ComplexMatrix prod = first[k1] * second[k2];
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((prod + prod.adjoint()) / 2.0,
                                                           Eigen::EigenvaluesOnly);
      const auto &ev = solver.eigenvalues();
      const Eigen::Index rank = (ev.array() > 0.5).count();
      const bool idempotent = max_abs_diff(prod * prod, prod) <= tolerance::kConstruction;
      if (rank != 1 || !idempotent) {
        report.all_rank_one = false;
        continue;
      }
      for (Eigen::Index u = 0; u < basis.cols(); ++u) {
        const double expectation = std::real(basis.col(u).dot(prod * basis.col(u)));
        if (expectation >= 1.0 - 1e-8) {
          report.state_for_outcome[k1 * p + k2] = static_cast<int>(u);
          report.worst_overlap_defect = std::max(report.worst_overlap_defect, std::abs(1.0 - expectation));
          if (used[u]) injective = false;
          used[u] = true;
          break;
        }
      }
    }
  }
  bool all_matched = true;
  for (int s : report.state_for_outcome) all_matched = all_matched && s >= 0;
  report.bijective = injective && all_matched;
  return report;
}

PartitionReport partition_check(const MubCertificate &cert) {
  const std::uint32_t p = cert.p;
  const std::uint64_t space = std::uint64_t{p} * p * p * p;
  std::vector<bool> seen(space, false);
  PartitionReport report;
  report.classes = cert.members.size();
  report.full = cert.members.size() == std::size_t{p} * p - 1;
  for (const auto &F : cert.members) {
    for (const auto &label : class_members(class_for(F))) {
      ++report.labels_seen;
      if (!label.is_weight_two()) ++report.non_weight_two;
      const std::uint64_t code = label.label_code(p);
      if (seen[code]) {
        ++report.repeated;
      } else {
        seen[code] = true;
        ++report.distinct_labels;
      }
    }
  }
  const std::size_t all_weight_two = (std::size_t{p} * p - 1) * (std::size_t{p} * p - 1);
  report.exhausted = report.distinct_labels == all_weight_two;
  return report;
}

std::string observables_csv(const MubCertificate &cert) {
  std::ostringstream out;
  out << "alpha,beta,gamma,delta,g,g_prime\n";
  for (const auto &F : cert.members) {
    const StabilizerClass c = class_for(F);
    out << F.alpha << "," << F.beta << "," << F.gamma << "," << F.delta << ",\"" << to_string(c.generator)
        << "\",\"" << to_string(c.generator_prime) << "\"\n";
  }
  return out.str();
}

}  // namespace besmub
