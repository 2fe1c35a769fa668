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

#include "besmub/qubit_table.hpp"

#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace besmub {

const std::array<QubitBasisEntry, 6> &qubit_table() {
  static const std::array<QubitBasisEntry, 6> table{{
      {Sl2Matrix{2, 0, 1, 1, 0}, "XZ", "ZX"},
      {Sl2Matrix{2, 0, 1, 1, 1}, "XZ", "ZY"},
      {Sl2Matrix{2, 1, 0, 0, 1}, "XX", "ZZ"},
      {Sl2Matrix{2, 1, 0, 1, 1}, "XY", "ZZ"},
      {Sl2Matrix{2, 1, 1, 0, 1}, "YZ", "ZY"},
      {Sl2Matrix{2, 1, 1, 1, 0}, "YZ", "ZX"},
  }};
  return table;
}

namespace {

Eigen::Matrix2cd single_qubit(char c) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (c) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
  }
  return m;
}

const QubitBasisEntry &entry_for(const Sl2Matrix &F) {
  for (const auto &e : qubit_table()) {
    if (e.F == F) return e;
  }
  throw std::invalid_argument("not an element of SL(2,Z_2): " + to_string(F));
}

}  // namespace

ComplexMatrix qubit_pauli(std::string_view label) {
  if (label.size() != 2) throw std::invalid_argument("two-qubit Pauli label must have two letters");
  const Eigen::Matrix2cd a = single_qubit(label[0]);
  const Eigen::Matrix2cd b = single_qubit(label[1]);
  ComplexMatrix out(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  }
  return out;
}

ComplexMatrix qubit_stabilizer_density(const QubitBasisEntry &entry, int s1, int s2) {
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  return (id + static_cast<double>(s1) * qubit_pauli(entry.generator)) *
         (id + static_cast<double>(s2) * qubit_pauli(entry.generator_prime)) / 4.0;
}

ComplexMatrix qubit_basis(const Sl2Matrix &F) {
  const QubitBasisEntry &entry = entry_for(F);
  ComplexMatrix basis(4, 4);
  for (int u1 = 0; u1 < 2; ++u1) {
    for (int u2 = 0; u2 < 2; ++u2) {
      const ComplexMatrix rho = qubit_stabilizer_density(entry, u1 ? -1 : 1, u2 ? -1 : 1);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho);
      // Eigenvalues ascend; the rank-one projector's eigenvector is last.
      basis.col(2 * u1 + u2) = solver.eigenvectors().col(3);
    }
  }
  return basis;
}

std::array<std::array<std::size_t, 3>, 2> qubit_triangles() {
  // {[[0,1],[1,1]], I, [[1,1],[1,0]]} is the order-3 subgroup; the other
  // triangle is its coset.
  return {{{1, 2, 5}, {0, 3, 4}}};
}

}  // namespace besmub
