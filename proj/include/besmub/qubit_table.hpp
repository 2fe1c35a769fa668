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
#include <cstddef>
#include <string_view>

#include "besmub/modp.hpp"
#include "besmub/quantum_oracle.hpp"

namespace besmub {

/// Two-qubit stabilizer basis attached to one element of SL(2, Z_2). The basis
/// states are the joint eigenvectors of two commuting Hermitean Pauli strings.
struct QubitBasisEntry {
  Sl2Matrix F;
  std::string_view generator;
  std::string_view generator_prime;
};

/// One entry per element of SL(2, Z_2), in lexicographic order.
const std::array<QubitBasisEntry, 6> &qubit_table();

/// 4x4 Hermitean Pauli operator for a label such as "XZ" (first letter acts on
/// the first qubit).
ComplexMatrix qubit_pauli(std::string_view label);

/// rho = (I + s1 g)(I + s2 g') / 4, with s1, s2 in {+1, -1}.
ComplexMatrix qubit_stabilizer_density(const QubitBasisEntry &entry, int s1, int s2);

/// 4x4 matrix whose column 2*u1 + u2 is the state with signs (-1)^u1, (-1)^u2.
ComplexMatrix qubit_basis(const Sl2Matrix &F);

/// The two BES MUBs (triangles) that partition SL(2, Z_2), as indices into
/// enumerate_sl2(2).
std::array<std::array<std::size_t, 3>, 2> qubit_triangles();

}  // namespace besmub
