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
#include <random>

#include "gtest/gtest.h"

#include "besmub/clique.hpp"
#include "besmub/reconstruction.hpp"

using namespace besmub;

namespace {

Residues2 add(Residues2 a, Residues2 b, std::uint32_t p) { return {(a[0] + b[0]) % p, (a[1] + b[1]) % p}; }

Residues2 act(const Sl2Matrix &F, Residues2 v) {
  const std::uint32_t p = F.p;
  return {(F.alpha * v[0] + F.beta * v[1]) % p, (F.gamma * v[0] + F.delta * v[1]) % p};
}

Residues2 negate(Residues2 v, std::uint32_t p) { return {(p - v[0]) % p, (p - v[1]) % p}; }

std::vector<CliffordElement> all_elements(std::uint32_t p) {
  std::vector<CliffordElement> out;
  for (const auto &F : enumerate_sl2(Prime(p))) {
    for (std::uint32_t u1 = 0; u1 < p; u1++) {
      for (std::uint32_t u2 = 0; u2 < p; u2++) out.push_back({F, {u1, u2}});
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); i++) {
    for (Eigen::Index j = 0; j < a.cols(); j++) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

ComplexMatrix random_hermitean(std::size_t n, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; i++) {
    for (std::size_t j = 0; j < n; j++) a(i, j) = Complex(normal(rng), normal(rng));
  }
  return (a + a.adjoint()) / 2.0;
}

// Linear-inversion reference: stack vec(Pi)^H for every outcome projector and
// take the minimum-norm least-squares solution. Its row space is the span of
// the projectors, so for W in that span the solution is W itself.
ComplexMatrix linear_inversion(const std::vector<Sl2Matrix> &bases, const ProbabilityTable &table) {
  const std::uint32_t p = table.p;
  const Eigen::Index d = p * p;
  ComplexMatrix design(bases.size() * d, d * d);
  Eigen::VectorXcd rhs(bases.size() * d);
  for (std::size_t k = 0; k < bases.size(); k++) {
    ComplexMatrix basis = jam_basis(bases[k]);
    for (Eigen::Index j = 0; j < d; j++) {
      ComplexMatrix proj = basis.col(j) * basis.col(j).adjoint();
      Eigen::Index row = static_cast<Eigen::Index>(k) * d + j;
      for (Eigen::Index a = 0; a < d; a++) {
        for (Eigen::Index b = 0; b < d; b++) design(row, b * d + a) = std::conj(proj(a, b));
      }
      rhs(row) = table.probs[k][j];
    }
  }
  Eigen::VectorXcd x = design.completeOrthogonalDecomposition().solve(rhs);
  ComplexMatrix w(d, d);
  for (Eigen::Index a = 0; a < d; a++) {
    for (Eigen::Index b = 0; b < d; b++) w(a, b) = x(b * d + a);
  }
  return w;
}

}  // namespace

TEST(displacement, identity_and_shift) {
  EXPECT_LE(max_abs_diff(build_displacement(Prime(5), {0, 0}), ComplexMatrix::Identity(5, 5)), 1e-12);
  ComplexMatrix d = build_displacement(Prime(3), {1, 0});
  ComplexMatrix shift = ComplexMatrix::Zero(3, 3);
  for (int j = 0; j < 3; j++) shift((j + 1) % 3, j) = 1;
  EXPECT_LE(max_abs_diff(d, shift), 1e-12);
  EXPECT_THROW(build_displacement(Prime(2), {1, 0}), std::domain_error);
}

TEST(displacement, group_law_up_to_phase) {
  const std::uint32_t p = 3;
  for (std::uint32_t a = 0; a < p * p; a++) {
    for (std::uint32_t b = 0; b < p * p; b++) {
      Residues2 u{a / p, a % p}, v{b / p, b % p};
      ComplexMatrix lhs = build_displacement(Prime(p), u) * build_displacement(Prime(p), v);
      ComplexMatrix rhs = build_displacement(Prime(p), add(u, v, p));
      EXPECT_TRUE(equal_up_to_phase(lhs, rhs, 1e-10));
    }
  }
}

TEST(displacement, tau_has_order_p_for_odd_p) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    EXPECT_LE(std::abs(tau_power(p, p) - Complex(1, 0)), 1e-12);
    EXPECT_LE(std::abs(tau_power(2, p) - omega_power(1, p)), 1e-12);
    EXPECT_LE(std::abs(tau_power(-1, p) - tau_power(2 * p - 1, p)), 1e-12);
  }
}

TEST(clifford, identity_element) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    ComplexMatrix c = build_clifford({Sl2Matrix::identity(Prime(p)), {0, 0}});
    EXPECT_LE(max_abs_diff(c, ComplexMatrix::Identity(p, p)), 1e-12);
    EXPECT_NEAR(std::abs(c.trace()), p, 1e-12);
  }
}

TEST(clifford, unitary_exhaustive_p3) {
  for (const auto &c : all_elements(3)) EXPECT_TRUE(is_unitary(build_clifford(c)));
}

TEST(clifford, unitary_sampled_p5_p7) {
  for (std::uint32_t p : {5u, 7u}) {
    auto elements = all_elements(p);
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    for (int trial = 0; trial < 200; trial++) EXPECT_TRUE(is_unitary(build_clifford(elements[pick(rng)])));
  }
}

TEST(clifford, composition_exhaustive_p3) {
  const std::uint32_t p = 3;
  auto elements = all_elements(p);
  std::vector<ComplexMatrix> built;
  for (const auto &c : elements) built.push_back(build_clifford(c));
  std::size_t failures = 0;
  for (std::size_t i = 0; i < elements.size(); i++) {
    for (std::size_t j = 0; j < elements.size(); j++) {
      const auto &[F, u] = elements[i];
      const auto &[K, v] = elements[j];
      ComplexMatrix lhs = built[i] * built[j];
      ComplexMatrix rhs = build_clifford({F * K, add(u, act(F, v), p)});
      if (!equal_up_to_phase(lhs, rhs, 1e-10)) failures++;
    }
  }
  EXPECT_EQ(failures, 0u);
}

TEST(clifford, inverse_exhaustive_p3) {
  const std::uint32_t p = 3;
  for (const auto &[F, u] : all_elements(p)) {
    ComplexMatrix lhs = build_clifford({F, u}).adjoint();
    Sl2Matrix Finv = sl2_inv(F);
    ComplexMatrix rhs = build_clifford({Finv, negate(act(Finv, u), p)});
    EXPECT_TRUE(equal_up_to_phase(lhs, rhs, 1e-10));
  }
}

TEST(clifford, conjugation_maps_displacements) {
  for (std::uint32_t p : {3u, 5u}) {
    for (const auto &F : enumerate_sl2(Prime(p))) {
      ComplexMatrix c = build_clifford({F, {1, 2}});
      for (Residues2 v : {Residues2{1, 0}, Residues2{0, 1}}) {
        ComplexMatrix lhs = c * build_displacement(Prime(p), v) * c.adjoint();
        ComplexMatrix rhs = build_displacement(Prime(p), act(F, v));
        EXPECT_TRUE(equal_up_to_phase(lhs, rhs, 1e-10));
      }
    }
  }
}

TEST(phase_compare, distinguishes_different_operators) {
  ComplexMatrix a = build_displacement(Prime(3), {1, 0});
  ComplexMatrix b = build_displacement(Prime(3), {0, 1});
  EXPECT_FALSE(equal_up_to_phase(a, b, 1e-10));
  EXPECT_TRUE(equal_up_to_phase(a, Complex(0, 1) * a, 1e-10));
}

TEST(trace_relations, examples_p3) {
  Prime p(3);
  for (const auto &F : enumerate_sl2(p)) {
    if (F.trace() != 0) continue;
    for (std::uint32_t u1 = 0; u1 < 3; u1++) {
      for (std::uint32_t u2 = 0; u2 < 3; u2++) {
        EXPECT_NEAR(std::abs(build_clifford({F, {u1, u2}}).trace()), 1.0, 1e-9);
      }
    }
  }
  EXPECT_NEAR(std::abs(build_clifford({Sl2Matrix::identity(p), {1, 0}}).trace()), 0.0, 1e-9);
}

TEST(trace_relations, root_p_on_line_p5) {
  Prime p(5);
  for (const auto &F : enumerate_sl2(p)) {
    if (F.beta == 0 || F.trace() != 2) continue;
    std::size_t hits = 0;
    for (std::uint32_t u1 = 0; u1 < 5; u1++) {
      for (std::uint32_t u2 = 0; u2 < 5; u2++) {
        double t = std::abs(build_clifford({F, {u1, u2}}).trace());
        EXPECT_TRUE(std::abs(t) < 1e-9 || std::abs(t - std::sqrt(5.0)) < 1e-9) << t;
        if (std::abs(t - std::sqrt(5.0)) < 1e-9) hits++;
      }
    }
    EXPECT_EQ(hits, 5u);
  }
}

TEST(trace_relations, exhaustive) {
  auto r3 = verify_trace_relations(Prime(3));
  EXPECT_EQ(r3.cases_checked, 24u * 9u);
  EXPECT_TRUE(r3.ok());
  auto r5 = verify_trace_relations(Prime(5));
  EXPECT_EQ(r5.cases_checked, 120u * 25u);
  EXPECT_TRUE(r5.ok());
}

TEST(jam_state, canonical_entangled_state) {
  const std::uint32_t p = 3;
  StateVector s = jam_state({Sl2Matrix::identity(Prime(p)), {0, 0}});
  StateVector expected = StateVector::Zero(p * p);
  for (std::uint32_t j = 0; j < p; j++) expected(j * p + j) = 1.0 / std::sqrt(3.0);
  EXPECT_LE((s - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(jam_state, orthonormal_bases) {
  for (std::uint32_t p : {3u, 5u}) {
    for (const auto &F : enumerate_sl2(Prime(p))) {
      ComplexMatrix b = jam_basis(F);
      ComplexMatrix gram = b.adjoint() * b;
      EXPECT_LE(max_abs_diff(gram, ComplexMatrix::Identity(p * p, p * p)), 1e-10);
    }
  }
}

TEST(jam_state, maximally_entangled) {
  for (std::uint32_t p : {3u, 5u}) {
    ComplexMatrix mixed = ComplexMatrix::Identity(p, p) / static_cast<double>(p);
    for (const auto &c : all_elements(p)) {
      StateVector s = jam_state(c);
      ComplexMatrix rho = s * s.adjoint();
      EXPECT_LE(max_abs_diff(partial_trace_first(rho, p), mixed), 1e-10);
      EXPECT_LE(max_abs_diff(partial_trace_second(rho, p), mixed), 1e-10);
    }
  }
}

TEST(jam_state, cross_overlaps_p3) {
  Prime p(3);
  ComplexMatrix a = jam_basis(Sl2Matrix::identity(p));
  ComplexMatrix b = jam_basis(Sl2Matrix::make(p, 1, 1, 1, 2));
  ComplexMatrix cross = a.adjoint() * b;
  EXPECT_LE((cross.cwiseAbs().array() - 1.0 / 3.0).abs().maxCoeff(), 1e-9);
}

TEST(jam_state, overlap_is_trace_over_p) {
  const std::uint32_t p = 5;
  auto elements = all_elements(p);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  for (int trial = 0; trial < 100; trial++) {
    const auto &a = elements[pick(rng)];
    const auto &b = elements[pick(rng)];
    double via_trace = std::abs((build_clifford(a).adjoint() * build_clifford(b)).trace()) / p;
    EXPECT_NEAR(overlap(jam_state(a), jam_state(b)), via_trace, 1e-10);
  }
}

TEST(overlap, trivial_cases) {
  StateVector s = jam_state({Sl2Matrix::identity(Prime(3)), {1, 2}});
  StateVector t = jam_state({Sl2Matrix::identity(Prime(3)), {2, 2}});
  EXPECT_NEAR(overlap(s, s), 1.0, 1e-12);
  EXPECT_NEAR(overlap(s, t), 0.0, 1e-12);
  EXPECT_THROW(overlap(s, StateVector::Zero(4)), std::invalid_argument);
}

TEST(lmm_check, examples) {
  const std::uint32_t p = 3;
  EXPECT_TRUE(lmm_check(ComplexMatrix::Identity(9, 9) / 9.0));
  ComplexMatrix zero_state = ComplexMatrix::Zero(3, 3);
  zero_state(0, 0) = 1;
  ComplexMatrix product = kron(zero_state, ComplexMatrix::Identity(3, 3) / 3.0);
  EXPECT_FALSE(lmm_check(product));
  for (const auto &c : all_elements(p)) {
    StateVector s = jam_state(c);
    EXPECT_TRUE(lmm_check(s * s.adjoint()));
  }
  ComplexMatrix skew = ComplexMatrix::Zero(9, 9);
  skew(0, 1) = 1;
  EXPECT_THROW(lmm_check(skew), std::invalid_argument);
}

TEST(lmm_check, projection_lands_in_lmm) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; trial++) {
    ComplexMatrix h = random_hermitean(9, rng);
    ComplexMatrix w = project_to_lmm(h, 3);
    EXPECT_TRUE(lmm_check(w));
    EXPECT_NEAR(std::abs(w.trace() - h.trace()), 0.0, 1e-10);
    // Idempotent projection.
    EXPECT_LE(max_abs_diff(project_to_lmm(w, 3), w), 1e-10);
  }
}

TEST(probabilities, rows_sum_to_trace) {
  auto cert = subgroup_clique(Prime(3));
  ComplexMatrix w = ComplexMatrix::Identity(9, 9) / 9.0;
  auto table = simulate_probabilities(cert.members, w);
  ASSERT_EQ(table.probs.size(), 8u);
  for (const auto &row : table.probs) {
    double sum = 0;
    for (double x : row) {
      sum += x;
      EXPECT_NEAR(x, 1.0 / 9.0, 1e-12);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(reconstruction, maximally_mixed) {
  auto cert = subgroup_clique(Prime(3));
  ComplexMatrix w = ComplexMatrix::Identity(9, 9) / 9.0;
  auto table = simulate_probabilities(cert.members, w);
  EXPECT_LE((lmm_reconstruct(cert, table, 1.0) - w).norm(), 1e-8);
}

TEST(reconstruction, member_state_projector) {
  for (std::uint32_t p : {3u, 5u}) {
    auto cert = subgroup_clique(Prime(p));
    StateVector s = jam_state({cert.members[2], {1, 0}});
    ComplexMatrix w = s * s.adjoint();
    auto table = simulate_probabilities(cert.members, w);
    // Its own basis sees a single certain outcome; every other basis is flat.
    for (std::size_t k = 0; k < cert.size(); k++) {
      for (std::size_t j = 0; j < table.probs[k].size(); j++) {
        double expected = k == 2 ? (j == p ? 1.0 : 0.0) : 1.0 / (p * p);
        EXPECT_NEAR(table.probs[k][j], expected, 1e-10);
      }
    }
    EXPECT_LE((lmm_reconstruct(cert, table, 1.0) - w).norm(), 1e-8);
  }
}

TEST(reconstruction, closed_form_agrees_with_linear_inversion) {
  auto cert = subgroup_clique(Prime(3));
  std::mt19937_64 rng(20110301);
  for (int trial = 0; trial < 5; trial++) {
    ComplexMatrix w = project_to_lmm(random_hermitean(9, rng), 3);
    auto table = simulate_probabilities(cert.members, w);
    ComplexMatrix closed = lmm_reconstruct(cert, table, std::real(w.trace()));
    ComplexMatrix reference = linear_inversion(cert.members, table);
    EXPECT_LE((reference - w).norm(), 1e-8);
    EXPECT_LE((closed - reference).norm(), 1e-8);
  }
}

TEST(reconstruction, other_complete_certificates) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {3u, 5u}) {
    auto cert = coset_partition(Prime(p)).back();
    ComplexMatrix w = project_to_lmm(random_hermitean(p * p, rng), p);
    auto table = simulate_probabilities(cert.members, w);
    EXPECT_LE((lmm_reconstruct(cert, table, std::real(w.trace())) - w).norm(), 1e-8);
  }
}

TEST(reconstruction, rejects_bad_inputs) {
  auto cert = subgroup_clique(Prime(3));
  ComplexMatrix w = ComplexMatrix::Identity(9, 9) / 9.0;
  auto table = simulate_probabilities(cert.members, w);
  EXPECT_THROW(lmm_reconstruct(cert, table, 2.0), std::invalid_argument);
  auto unverified = cert;
  unverified.verified_graph = false;
  EXPECT_THROW(lmm_reconstruct(unverified, table, 1.0), std::invalid_argument);
  auto partial = constructive_clique(Prime(3), 2, 0);
  EXPECT_THROW(lmm_reconstruct(partial, simulate_probabilities(partial.members, w), 1.0), std::invalid_argument);
  auto shuffled = table;
  shuffled.bases[0] = Sl2Matrix::make(Prime(3), 1, 1, 0, 1);
  EXPECT_THROW(lmm_reconstruct(cert, shuffled, 1.0), std::invalid_argument);
}
