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
#include <cstdint>
#include <string>
#include <vector>

#include "besmub/clique.hpp"
#include "besmub/modp.hpp"
#include "besmub/quantum_oracle.hpp"

namespace besmub {

/// omega^-phase P_(x1,x2|z1,z2) = omega^-phase (X^x1 (x) X^x2)(Z^z1 (x) Z^z2).
struct SymplecticPauli {
  std::array<std::uint32_t, 2> x{0, 0};
  std::array<std::uint32_t, 2> z{0, 0};
  std::uint32_t phase = 0;

  bool is_identity() const noexcept { return x[0] == 0 && x[1] == 0 && z[0] == 0 && z[1] == 0; }
  /// Nontrivial on both qupits.
  bool is_weight_two() const noexcept { return (x[0] || z[0]) && (x[1] || z[1]); }
  /// Phase-free label packed as ((x1*p + x2)*p + z1)*p + z2.
  std::uint64_t label_code(std::uint32_t p) const noexcept {
    return ((std::uint64_t{x[0]} * p + x[1]) * p + z[0]) * p + z[1];
  }

  friend bool operator==(const SymplecticPauli &, const SymplecticPauli &) = default;
};

/// "(x1,x2|z1,z2)"
std::string to_string(const SymplecticPauli &op);

ComplexMatrix pauli_matrix(Prime p, const SymplecticPauli &op);

/// (1/p) sum_m omega^(-m k) P^m, the projector onto the omega^k eigenspace
/// of the phase-free operator. Throws std::invalid_argument for the identity.
ComplexMatrix projector(Prime p, const SymplecticPauli &op, std::uint32_t k);

/// sum_i (x_i z'_i - x'_i z_i) == 0 mod p.
bool symplectic_commute(const SymplecticPauli &a, const SymplecticPauli &b, Prime p);

/// Commuting generators of the Pauli class whose joint eigenbasis is the
/// Jamiolkowski basis of F.
struct StabilizerClass {
  Sl2Matrix F;
  SymplecticPauli generator;
  SymplecticPauli generator_prime;
};

StabilizerClass class_for(const Sl2Matrix &F);

/// The p^2 - 1 non-identity phase-free labels a g + b g'.
std::vector<SymplecticPauli> class_members(const StabilizerClass &c);

struct EigenbasisReport {
  /// state_for_outcome[k1 * p + k2] = u1 * p + u2 of the matching state, or -1.
  std::vector<int> state_for_outcome;
  bool all_rank_one = true;
  bool bijective = false;
  double worst_overlap_defect = 0.0;
  bool ok() const noexcept { return all_rank_one && bijective; }
};

EigenbasisReport verify_eigenbasis(const Sl2Matrix &F);

struct PartitionReport {
  std::size_t classes = 0;
  std::size_t labels_seen = 0;
  std::size_t distinct_labels = 0;
  std::size_t non_weight_two = 0;
  std::size_t repeated = 0;
  bool full = false;       // certificate has p^2 - 1 members
  bool exhausted = false;  // distinct labels == (p^2 - 1)^2
  bool ok() const noexcept { return non_weight_two == 0 && repeated == 0 && (!full || exhausted); }
};

PartitionReport partition_check(const MubCertificate &cert);

/// One row per member: alpha,beta,gamma,delta,g,g_prime.
std::string observables_csv(const MubCertificate &cert);

}  // namespace besmub
