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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "besmub/modp.hpp"
#include "besmub/vertex_set.hpp"
#include "json.hpp"

namespace besmub {

/// Largest p for which build_graph materialises the adjacency bit-matrix.
/// At p = 23 the matrix is 12144^2 bits, about 18 MB.
inline constexpr std::uint32_t kDefaultGraphMaxPrime = 23;

/// Cayley graph of SL(2, Z_p) with connection set {F : Tr(F) != 2}: vertices i
/// and j are adjacent iff Tr(F_i^-1 F_j) != 2 (mod p). Immutable once built.
class CayleyGraph {
 public:
  Prime p() const noexcept { return p_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Sl2Matrix> &vertices() const noexcept { return vertices_; }
  const Sl2Matrix &vertex(std::size_t i) const { return vertices_.at(i); }

  bool adjacent(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
  const VertexSet &neighbours(std::size_t i) const noexcept { return rows_[i]; }
  std::size_t degree(std::size_t i) const noexcept { return rows_[i].count(); }
  std::uint64_t edge_count() const noexcept;

  /// Index of m in the lexicographic vertex order, if m belongs to this group.
  std::optional<std::size_t> index_of(const Sl2Matrix &m) const noexcept;
  /// Like index_of but throws std::out_of_range for foreign matrices.
  std::size_t require_index(const Sl2Matrix &m) const;

  /// |G| - p^2, the regular degree.
  std::size_t expected_degree() const noexcept { return size() - std::size_t{p_} * p_; }

 private:
  friend CayleyGraph build_graph(Prime p, std::uint32_t max_prime);

  explicit CayleyGraph(Prime p) : p_(p) {}

  Prime p_;
  std::vector<Sl2Matrix> vertices_;
  std::vector<VertexSet> rows_;
};

CayleyGraph build_graph(Prime p, std::uint32_t max_prime = kDefaultGraphMaxPrime);

/// Proper colouring by first row (alpha, beta): colour id alpha*p + beta - 1.
struct VertexColoring {
  std::vector<std::uint32_t> colors;
  std::uint32_t num_colors = 0;
};

VertexColoring row_coloring(const CayleyGraph &g);
bool is_proper_coloring(const CayleyGraph &g, const VertexColoring &c);

/// The p^2 - 1 row classes; each is an independent set of size p.
std::vector<std::vector<std::size_t>> independent_row_sets(const CayleyGraph &g);
bool is_independent(const CayleyGraph &g, std::span<const std::size_t> members);

/// DIMACS "p edge n m" text with 1-based "e i j" lines, i < j.
std::string export_dimacs(const CayleyGraph &g);

/// Adjacency rows parsed from DIMACS edge text. Throws std::runtime_error on
/// malformed input.
struct DimacsGraph {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::vector<VertexSet> rows;
};
DimacsGraph parse_dimacs(std::string_view text);

/// [{"index": i, "alpha": .., "beta": .., "gamma": .., "delta": ..}, ...]
nlohmann::json vertex_table_json(const CayleyGraph &g);

}  // namespace besmub
